/** Shared test doubles: canned-payload fetchers, no server needed. */

import type { Fetcher } from "../src/api";

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** Serves payloads by path; unrouted paths get a JSON 404 like the API's. */
export function routeFetcher(routes: Record<string, unknown>, calls: string[] = []): Fetcher {
  return async (url) => {
    calls.push(url);
    const path = new URL(url, "http://fixture").pathname;
    if (path in routes) return jsonResponse(routes[path]);
    return jsonResponse({ error: `no fixture for ${path}` }, 404);
  };
}
