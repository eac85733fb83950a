/** Typed client for the chronoscope JSON API. All reads, no writes. */

export interface Series {
  label: string;
  mode: string;
  from: number;
  to: number;
  values: (number | null)[];
}

export interface SeriesPayload {
  schema_version: number;
  series: Series[];
}

export interface Marker {
  canonical: string;
  latitude: number;
  longitude: number;
  count: number;
  rank: number;
}

export interface MapPayload {
  schema_version: number;
  from: number;
  to: number;
  markers: Marker[];
}

export interface RankingEntry {
  canonical: string;
  count: number;
  rank: number;
}

export interface TopPayload {
  schema_version: number;
  kind: string;
  from: number;
  to: number;
  ranking: RankingEntry[];
}

export interface MetaPayload {
  schema_version: number;
  years: { from: number; to: number } | null;
  doc_count: number;
  token_count: number;
  entity_kinds: string[];
  entity_counts: Record<string, number>;
  groups: { name: string; members: string[]; regions: Record<string, string[]> }[];
  externals: string[];
  sentiment_views: string[];
  lexicon: { name: string; positive_words: number; negative_words: number };
}

/** A non-2xx response; message is the server's own error text, verbatim. */
export class ApiError extends Error {
  status: number;
  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

export type Fetcher = (url: string, init?: { signal?: AbortSignal }) => Promise<Response>;

export class ApiClient {
  baseUrl: string;
  private fetcher: Fetcher;

  constructor(baseUrl = "", fetcher: Fetcher = (...args) => fetch(...args)) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetcher = fetcher;
  }

  private async get<T>(path: string, params: Record<string, string>, signal?: AbortSignal): Promise<T> {
    const query = new URLSearchParams(params).toString();
    const url = `${this.baseUrl}${path}${query ? "?" + query : ""}`;
    const response = await this.fetcher(url, { signal });
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const message =
        body && typeof body.error === "string" ? body.error : `${response.status} from ${path}`;
      throw new ApiError(response.status, message);
    }
    return body as T;
  }

  meta(signal?: AbortSignal): Promise<MetaPayload> {
    return this.get("/api/meta", {}, signal);
  }

  trend(terms: string[], from: number, to: number, mode?: string, signal?: AbortSignal): Promise<SeriesPayload> {
    const params: Record<string, string> = { terms: terms.join(","), from: String(from), to: String(to) };
    if (mode) params.mode = mode;
    return this.get("/api/trend", params, signal);
  }

  cooccur(a: string, b: string, from: number, to: number, signal?: AbortSignal): Promise<SeriesPayload> {
    return this.get("/api/cooccur", { a, b, from: String(from), to: String(to) }, signal);
  }

  groupCooccur(
    group: string,
    anchor: string,
    region: string | null,
    from: number,
    to: number,
    signal?: AbortSignal,
  ): Promise<SeriesPayload> {
    const params: Record<string, string> = { group, anchor, from: String(from), to: String(to) };
    if (region) params.region = region;
    return this.get("/api/group-cooccur", params, signal);
  }

  sentiment(view: string, from: number, to: number, signal?: AbortSignal): Promise<SeriesPayload> {
    return this.get("/api/sentiment", { view, from: String(from), to: String(to) }, signal);
  }

  external(name: string, transform: string | null, from: number, to: number, signal?: AbortSignal): Promise<SeriesPayload> {
    const params: Record<string, string> = { name, from: String(from), to: String(to) };
    if (transform) params.transform = transform;
    return this.get("/api/external", params, signal);
  }

  map(k: number, from: number, to: number, signal?: AbortSignal): Promise<MapPayload> {
    return this.get("/api/map", { k: String(k), from: String(from), to: String(to) }, signal);
  }
}
