/** View data models. Values are taken from API payloads verbatim: the UI
 * never aggregates, rounds, or fills; it only decides where to draw them. */

import type { MapPayload, Marker, Series, SeriesPayload } from "./api.js";

export interface TrendModel {
  series: Series[];
}

export function buildTrendModel(payload: SeriesPayload): TrendModel {
  return { series: payload.series };
}

export interface MapModel {
  markers: Marker[];
  from: number;
  to: number;
}

export function buildMapModel(payload: MapPayload): MapModel {
  return { markers: payload.markers, from: payload.from, to: payload.to };
}

export interface OverlayModel {
  left: Series[]; // sentiment shares, percent axis
  right: Series[]; // external transform, its own percent axis
  notice: string | null; // set when one side failed and the other renders alone
}

export function buildOverlayModel(
  sentiment: SeriesPayload | null,
  external: SeriesPayload | null,
  externalName: string,
): OverlayModel {
  const missing: string[] = [];
  if (!sentiment) missing.push("sentiment");
  if (!external) missing.push(externalName);
  return {
    left: sentiment ? sentiment.series : [],
    right: external ? external.series : [],
    notice: missing.length ? `no data for: ${missing.join(", ")}` : null,
  };
}

export interface Point {
  year: number;
  value: number;
}

/** Consecutive non-null runs of a series. Null years break the line into
 * separate segments, so coverage gaps render as gaps, never as zero dips. */
export function segments(series: Series): Point[][] {
  const runs: Point[][] = [];
  let run: Point[] = [];
  series.values.forEach((value, i) => {
    if (value === null) {
      if (run.length) runs.push(run);
      run = [];
    } else {
      run.push({ year: series.from + i, value });
    }
  });
  if (run.length) runs.push(run);
  return runs;
}

/** Min/max over every non-null value of several series, for axis scaling. */
export function valueExtent(seriesList: Series[]): { min: number; max: number } | null {
  let min = Infinity;
  let max = -Infinity;
  for (const s of seriesList) {
    for (const v of s.values) {
      if (v === null) continue;
      if (v < min) min = v;
      if (v > max) max = v;
    }
  }
  if (min === Infinity) return null;
  return { min, max };
}
