/** Query state and its URL round trip: every view is a shareable link. */

export type ViewMode = "trend" | "cooccur" | "sentiment" | "map";

export interface QueryState {
  view: ViewMode;
  terms: string[];
  pair: { a: string; b: string } | null;
  group: string | null;
  anchor: string | null;
  region: string | null;
  from: number | null; // null = full corpus coverage
  to: number | null;
  mode: "df" | "tf";
  k: number;
}

export const DEFAULT_STATE: QueryState = {
  view: "trend",
  terms: [],
  pair: null,
  group: null,
  anchor: null,
  region: null,
  from: null,
  to: null,
  mode: "df",
  k: 10,
};

const VIEWS = new Set<ViewMode>(["trend", "cooccur", "sentiment", "map"]);

/** Serialize to a query string; defaults are omitted so links stay short. */
export function encodeState(state: QueryState): string {
  const params = new URLSearchParams();
  if (state.view !== DEFAULT_STATE.view) params.set("view", state.view);
  if (state.terms.length) params.set("terms", state.terms.join(","));
  if (state.pair) {
    params.set("a", state.pair.a);
    params.set("b", state.pair.b);
  }
  if (state.group) params.set("group", state.group);
  if (state.anchor) params.set("anchor", state.anchor);
  if (state.region) params.set("region", state.region);
  if (state.from !== null) params.set("from", String(state.from));
  if (state.to !== null) params.set("to", String(state.to));
  if (state.mode !== DEFAULT_STATE.mode) params.set("mode", state.mode);
  if (state.k !== DEFAULT_STATE.k) params.set("k", String(state.k));
  return params.toString();
}

function parseYear(raw: string | null): number | null {
  if (raw === null || !/^-?\d+$/.test(raw)) return null;
  return parseInt(raw, 10);
}

/** Inverse of encodeState; unknown or malformed values fall back to defaults. */
export function decodeState(query: string): QueryState {
  const params = new URLSearchParams(query);
  const state: QueryState = { ...DEFAULT_STATE, terms: [], pair: null };

  const view = params.get("view");
  if (view && VIEWS.has(view as ViewMode)) state.view = view as ViewMode;

  const terms = params.get("terms");
  if (terms) {
    state.terms = terms
      .split(",")
      .map((t) => t.trim())
      .filter((t) => t.length > 0);
  }

  const a = params.get("a");
  const b = params.get("b");
  if (a && b) state.pair = { a, b };

  state.group = params.get("group");
  state.anchor = params.get("anchor");
  state.region = params.get("region");
  state.from = parseYear(params.get("from"));
  state.to = parseYear(params.get("to"));
  if (params.get("mode") === "tf") state.mode = "tf";

  const k = parseYear(params.get("k"));
  if (k !== null && k >= 1) state.k = k;

  return state;
}

/** Clamp the year range to corpus coverage and fill open ends. */
export function resolveRange(
  state: QueryState,
  coverage: { from: number; to: number },
): { from: number; to: number } {
  let from = state.from ?? coverage.from;
  let to = state.to ?? coverage.to;
  from = Math.min(Math.max(from, coverage.from), coverage.to);
  to = Math.min(Math.max(to, coverage.from), coverage.to);
  if (from > to) [from, to] = [to, from];
  return { from, to };
}

/** Marker click feeds the next query: the country becomes a trend term. */
export function withTerm(state: QueryState, term: string): QueryState {
  if (state.terms.includes(term)) return { ...state, view: "trend" };
  return { ...state, view: "trend", terms: [...state.terms, term] };
}
