/** SVG line charts, rendered as markup strings. No chart library: the
 * series are small (one point per year) and gaps need exact control. */

import type { Series } from "./api.js";
import { segments, valueExtent } from "./model.js";

export const PALETTE = ["#2563eb", "#dc2626", "#059669", "#d97706", "#7c3aed", "#0891b2"];

const W = 860;
const H = 380;
const PAD = { left: 56, right: 56, top: 16, bottom: 36 };

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

interface Scale {
  (v: number): number;
}

function linear(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

function niceTicks(min: number, max: number, n = 5): number[] {
  if (min === max) return [min];
  const step = Math.pow(10, Math.floor(Math.log10((max - min) / n)));
  const err = (max - min) / n / step;
  const mult = err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1;
  const s = step * mult;
  const ticks: number[] = [];
  for (let v = Math.ceil(min / s) * s; v <= max + s / 1e6; v += s) ticks.push(Math.round(v * 1e6) / 1e6);
  return ticks;
}

function yearTicks(from: number, to: number): number[] {
  const span = to - from;
  const step = span > 60 ? 20 : span > 25 ? 10 : span > 12 ? 5 : 1;
  const ticks: number[] = [];
  for (let y = Math.ceil(from / step) * step; y <= to; y += step) ticks.push(y);
  return ticks.length ? ticks : [from];
}

function polylines(s: Series, x: Scale, y: Scale, color: string): string {
  const parts: string[] = [];
  for (const run of segments(s)) {
    if (run.length === 1) {
      // an isolated point between gaps still needs to be visible
      const p = run[0]!;
      parts.push(`<circle cx="${x(p.year)}" cy="${y(p.value)}" r="3" fill="${color}"/>`);
    } else {
      const points = run.map((p) => `${x(p.year)},${y(p.value)}`).join(" ");
      parts.push(`<polyline points="${points}" fill="none" stroke="${color}" stroke-width="2"/>`);
    }
  }
  return parts.join("");
}

function axes(x: Scale, yLeft: Scale, from: number, to: number, leftTicks: number[], rightTicks?: { scale: Scale; ticks: number[] }): string {
  const parts: string[] = [];
  for (const year of yearTicks(from, to)) {
    parts.push(`<text x="${x(year)}" y="${H - PAD.bottom + 18}" class="tick" text-anchor="middle">${year}</text>`);
    parts.push(`<line x1="${x(year)}" y1="${H - PAD.bottom}" x2="${x(year)}" y2="${H - PAD.bottom + 4}" class="axis"/>`);
  }
  for (const t of leftTicks) {
    parts.push(`<text x="${PAD.left - 8}" y="${yLeft(t) + 4}" class="tick" text-anchor="end">${t}</text>`);
    parts.push(`<line x1="${PAD.left}" y1="${yLeft(t)}" x2="${W - PAD.right}" y2="${yLeft(t)}" class="grid"/>`);
  }
  if (rightTicks) {
    for (const t of rightTicks.ticks) {
      parts.push(`<text x="${W - PAD.right + 8}" y="${rightTicks.scale(t) + 4}" class="tick" text-anchor="start">${t}</text>`);
    }
  }
  parts.push(`<line x1="${PAD.left}" y1="${H - PAD.bottom}" x2="${W - PAD.right}" y2="${H - PAD.bottom}" class="axis"/>`);
  return parts.join("");
}

export function legend(labels: string[]): string {
  const items = labels
    .map((label, i) => {
      const color = PALETTE[i % PALETTE.length];
      return `<span class="legend-item"><span class="swatch" style="background:${color}"></span>${esc(label)}</span>`;
    })
    .join("");
  return `<div class="legend">${items}</div>`;
}

/** One shared left axis; legend order is series order, which is request order. */
export function renderLineChart(seriesList: Series[]): string {
  if (!seriesList.length) return "";
  const from = Math.min(...seriesList.map((s) => s.from));
  const to = Math.max(...seriesList.map((s) => s.to));
  const extent = valueExtent(seriesList);
  if (!extent) return `<p class="notice">every year in range is null (outside corpus coverage)</p>`;
  const lo = Math.min(0, extent.min);
  const hi = extent.max === lo ? lo + 1 : extent.max;
  const x = linear(from, to, PAD.left, W - PAD.right);
  const y = linear(lo, hi, H - PAD.bottom, PAD.top);
  const lines = seriesList
    .map((s, i) => polylines(s, x, y, PALETTE[i % PALETTE.length]!))
    .join("");
  return (
    legend(seriesList.map((s) => s.label)) +
    `<svg viewBox="0 0 ${W} ${H}" role="img">` +
    axes(x, y, from, to, niceTicks(lo, hi)) +
    lines +
    `</svg>`
  );
}

/** Sentiment shares on the left axis, the external series on the right. */
export function renderOverlayChart(left: Series[], right: Series[]): string {
  const all = [...left, ...right];
  if (!all.length) return "";
  const from = Math.min(...all.map((s) => s.from));
  const to = Math.max(...all.map((s) => s.to));
  const x = linear(from, to, PAD.left, W - PAD.right);

  const parts: string[] = [];
  const leftExtent = valueExtent(left);
  const rightExtent = valueExtent(right);
  const yLeft = leftExtent
    ? linear(Math.min(0, leftExtent.min), leftExtent.max || 1, H - PAD.bottom, PAD.top)
    : null;
  const yRight = rightExtent
    ? linear(Math.min(0, rightExtent.min), rightExtent.max || 1, H - PAD.bottom, PAD.top)
    : null;

  if (yLeft) {
    left.forEach((s, i) => parts.push(polylines(s, x, yLeft, PALETTE[i % PALETTE.length]!)));
  }
  if (yRight) {
    right.forEach((s, i) =>
      parts.push(polylines(s, x, yRight, PALETTE[(left.length + i) % PALETTE.length]!)),
    );
  }
  const axisMarkup = axes(
    x,
    yLeft ?? linear(0, 1, H - PAD.bottom, PAD.top),
    from,
    to,
    yLeft && leftExtent ? niceTicks(Math.min(0, leftExtent.min), leftExtent.max || 1) : [],
    yRight && rightExtent
      ? { scale: yRight, ticks: niceTicks(Math.min(0, rightExtent.min), rightExtent.max || 1) }
      : undefined,
  );
  return (
    legend(all.map((s) => s.label)) +
    `<svg viewBox="0 0 ${W} ${H}" role="img">` +
    axisMarkup +
    parts.join("") +
    `</svg>`
  );
}
