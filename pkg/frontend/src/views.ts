/** View dispatch: query state in, markup out. DOM-free on purpose, so the
 * request contracts (what gets fetched, what renders) are testable. */

import type { ApiClient, MetaPayload } from "./api.js";
import { renderLineChart, renderOverlayChart } from "./charts.js";
import { renderMap } from "./map.js";
import { buildMapModel, buildOverlayModel, buildTrendModel } from "./model.js";
import { QueryState, resolveRange } from "./state.js";

export async function renderViewMarkup(
  client: ApiClient,
  meta: MetaPayload,
  state: QueryState,
  signal?: AbortSignal,
): Promise<string> {
  if (!meta.years) return `<p class="empty">the corpus is empty</p>`;
  const { from, to } = resolveRange(state, meta.years);

  switch (state.view) {
    case "trend": {
      if (!state.terms.length) {
        return `<p class="empty">enter comma-separated terms to chart; multiword names match entities</p>`;
      }
      const payload = await client.trend(state.terms, from, to, state.mode === "tf" ? "tf" : undefined, signal);
      return renderLineChart(buildTrendModel(payload).series);
    }
    case "cooccur": {
      if (state.group && state.anchor) {
        const payload = await client.groupCooccur(state.group, state.anchor, state.region, from, to, signal);
        return renderLineChart(payload.series);
      }
      if (state.pair) {
        const payload = await client.cooccur(state.pair.a, state.pair.b, from, to, signal);
        return renderLineChart(payload.series);
      }
      return `<p class="empty">pick a pair of terms, or a group and an anchor</p>`;
    }
    case "sentiment": {
      const externalName = meta.externals[0] ?? null;
      const [sentiment, external] = await Promise.allSettled([
        client.sentiment("percent", from, to, signal),
        externalName
          ? client.external(externalName, "yoy", from, to, signal)
          : Promise.reject(new Error("no external series configured")),
      ]);
      if (sentiment.status === "rejected" && external.status === "rejected") {
        throw sentiment.reason;
      }
      const model = buildOverlayModel(
        sentiment.status === "fulfilled" ? sentiment.value : null,
        external.status === "fulfilled" ? external.value : null,
        externalName ?? "external",
      );
      const notice = model.notice ? `<p class="notice">${model.notice}</p>` : "";
      return notice + renderOverlayChart(model.left, model.right);
    }
    case "map": {
      const payload = await client.map(state.k, from, to, signal);
      const model = buildMapModel(payload);
      if (!model.markers.length) {
        return `<p class="empty">no country mentions in ${model.from}-${model.to}</p>`;
      }
      return renderMap(model.markers) + `<p class="hint">click a marker to chart that country</p>`;
    }
  }
}
