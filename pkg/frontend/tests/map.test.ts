/** Map view: exactly k markers, in rank order, feeding clicks back to trends. */

import { describe, expect, it } from "vitest";

import { ApiClient, Marker } from "../src/api";
import { MAP_H, MAP_W, project, renderMap } from "../src/map";
import { buildMapModel } from "../src/model";
import { DEFAULT_STATE, withTerm } from "../src/state";
import { renderViewMarkup } from "../src/views";
import map from "./fixtures/map.json";
import meta from "./fixtures/meta.json";
import { routeFetcher } from "./helpers";

const markerNames = (markup: string): string[] =>
  [...markup.matchAll(/data-term="([^"]+)"/g)].map((m) => m[1]!);

describe("map data model", () => {
  it("equals the /api/map response, byte for byte", () => {
    const model = buildMapModel(map);
    expect(JSON.stringify(model.markers)).toBe(JSON.stringify(map.markers));
    expect(model.from).toBe(map.from);
    expect(model.to).toBe(map.to);
  });
});

describe("map markup", () => {
  it("shows exactly k markers in rank order", () => {
    const markup = renderMap(map.markers as Marker[]);
    expect(markerNames(markup)).toEqual(["Japan", "United States", "Germany"]);
  });

  it("orders by rank even when the payload arrives shuffled", () => {
    const shuffled = [...(map.markers as Marker[])].reverse();
    expect(markerNames(renderMap(shuffled))).toEqual(["Japan", "United States", "Germany"]);
  });

  it("scales marker size with count", () => {
    const markup = renderMap(map.markers as Marker[]);
    const radii = [...markup.matchAll(/<circle [^>]*r="([\d.]+)"/g)].map((m) => parseFloat(m[1]!));
    expect(radii).toHaveLength(3);
    expect(radii[0]!).toBeGreaterThan(radii[1]!); // counts are 3 > 2 > 1
    expect(radii[1]!).toBeGreaterThan(radii[2]!);
  });

  it("labels each marker with its rank and count", () => {
    const markup = renderMap(map.markers as Marker[]);
    expect(markup).toContain('class="rank">1<');
    expect(markup).toContain("Japan (3)");
  });

  it("projects the equator/meridian crossing to the center", () => {
    expect(project(0, 0)).toEqual({ x: MAP_W / 2, y: MAP_H / 2 });
  });
});

describe("marker click contract", () => {
  it("adds the country as a trend term and switches view", () => {
    const clicked = withTerm({ ...DEFAULT_STATE, view: "map" }, "Japan");
    expect(clicked.view).toBe("trend");
    expect(clicked.terms).toContain("Japan");
  });
});

describe("map view dispatch", () => {
  it("requests k markers and renders them all", async () => {
    const calls: string[] = [];
    const client = new ApiClient("", routeFetcher({ "/api/map": map }, calls));
    const state = { ...DEFAULT_STATE, view: "map" as const, k: 3 };
    const markup = await renderViewMarkup(client, meta, state);
    expect(new URL(calls[0]!, "http://t").searchParams.get("k")).toBe("3");
    expect(markerNames(markup)).toHaveLength(3);
  });

  it("shows an empty-state note when no countries were mentioned", async () => {
    const empty = { schema_version: 1, from: 1990, to: 1992, markers: [] };
    const client = new ApiClient("", routeFetcher({ "/api/map": empty }));
    const markup = await renderViewMarkup(client, meta, { ...DEFAULT_STATE, view: "map" });
    expect(markup).toContain("no country mentions in 1990-1992");
    expect(markup).not.toContain("data-term");
  });
});
