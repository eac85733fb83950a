/** Schematic world map: an equirectangular plane with ranked markers.
 * Marker area scales with count; clicking one feeds the trend view. */

import type { Marker } from "./api.js";

export const MAP_W = 860;
export const MAP_H = 430;

export function project(latitude: number, longitude: number): { x: number; y: number } {
  return {
    x: ((longitude + 180) / 360) * MAP_W,
    y: ((90 - latitude) / 180) * MAP_H,
  };
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

function radius(count: number, maxCount: number): number {
  if (maxCount <= 0) return 6;
  return 6 + 18 * Math.sqrt(count / maxCount);
}

/** Markers are emitted in rank order; each carries data-term for the
 * click-to-trend handler. Graticule lines every 30 degrees for bearings. */
export function renderMap(markers: Marker[]): string {
  const parts: string[] = [`<svg viewBox="0 0 ${MAP_W} ${MAP_H}" role="img" class="map">`];
  parts.push(`<rect width="${MAP_W}" height="${MAP_H}" class="sea"/>`);
  for (let lon = -150; lon <= 150; lon += 30) {
    const { x } = project(0, lon);
    parts.push(`<line x1="${x}" y1="0" x2="${x}" y2="${MAP_H}" class="graticule"/>`);
  }
  for (let lat = -60; lat <= 60; lat += 30) {
    const { y } = project(lat, 0);
    parts.push(`<line x1="0" y1="${y}" x2="${MAP_W}" y2="${y}" class="graticule"/>`);
  }
  const byRank = [...markers].sort((a, b) => a.rank - b.rank);
  const maxCount = byRank.length ? Math.max(...byRank.map((m) => m.count)) : 0;
  for (const m of byRank) {
    const { x, y } = project(m.latitude, m.longitude);
    const r = radius(m.count, maxCount);
    const name = esc(m.canonical);
    parts.push(
      `<g class="marker" data-term="${name}" tabindex="0">` +
        `<circle cx="${x}" cy="${y}" r="${r.toFixed(1)}"/>` +
        `<text x="${x}" y="${y + 4}" text-anchor="middle" class="rank">${m.rank}</text>` +
        `<text x="${x}" y="${y - r - 4}" text-anchor="middle" class="name">${name} (${m.count})</text>` +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
