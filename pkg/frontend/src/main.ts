/** App wiring: controls on top, one view below, query state in the URL.
 * Control changes are debounced; responses apply latest-wins per view. */

import { ApiClient, ApiError, MetaPayload } from "./api.js";
import { DEFAULT_STATE, QueryState, ViewMode, decodeState, encodeState, withTerm } from "./state.js";
import { renderViewMarkup } from "./views.js";

declare global {
  interface Window {
    CHRONOSCOPE_API?: string;
  }
}

const DEBOUNCE_MS = 250;

function el<T extends HTMLElement>(selector: string): T {
  const node = document.querySelector<T>(selector);
  if (!node) throw new Error(`missing element: ${selector}`);
  return node;
}

class App {
  client = new ApiClient(window.CHRONOSCOPE_API ?? "");
  state: QueryState = { ...DEFAULT_STATE };
  meta: MetaPayload | null = null;
  private seq = 0;
  private controller: AbortController | null = null;
  private timer: number | null = null;

  async start(): Promise<void> {
    this.state = decodeState(location.search);
    try {
      this.meta = await this.client.meta();
    } catch (exc) {
      this.showError(exc instanceof Error ? exc.message : String(exc));
      return;
    }
    this.buildControls();
    this.bindEvents();
    this.syncControls();
    void this.run();
  }

  // -- query dispatch ------------------------------------------------------

  dispatch(): void {
    if (this.timer !== null) window.clearTimeout(this.timer);
    this.timer = window.setTimeout(() => {
      this.timer = null;
      void this.run();
    }, DEBOUNCE_MS);
  }

  private async run(): Promise<void> {
    const url = `${location.pathname}?${encodeState(this.state)}`;
    history.replaceState(null, "", url);

    this.controller?.abort();
    this.controller = new AbortController();
    const ticket = ++this.seq;
    const signal = this.controller.signal;
    try {
      const markup = this.meta ? await renderViewMarkup(this.client, this.meta, this.state, signal) : "";
      if (ticket === this.seq) this.setView(markup);
    } catch (exc) {
      if (signal.aborted || ticket !== this.seq) return; // a newer query took over
      this.showError(exc instanceof ApiError ? exc.message : `request failed: ${exc}`);
    }
  }

  private setView(markup: string): void {
    el("#view").innerHTML = markup;
  }

  private showError(message: string): void {
    this.setView(`<p class="error">${message.replace(/&/g, "&amp;").replace(/</g, "&lt;")}</p>`);
  }

  // -- controls ------------------------------------------------------------

  private buildControls(): void {
    const meta = this.meta;
    if (!meta) return;
    const group = el<HTMLSelectElement>("#group");
    group.innerHTML =
      `<option value="">group...</option>` +
      meta.groups.map((g) => `<option>${g.name}</option>`).join("");
    if (meta.years) {
      for (const id of ["#from", "#to"] as const) {
        const input = el<HTMLInputElement>(id);
        input.min = String(meta.years.from);
        input.max = String(meta.years.to);
        input.placeholder = id === "#from" ? String(meta.years.from) : String(meta.years.to);
      }
    }
  }

  private syncControls(): void {
    el<HTMLInputElement>("#terms").value = this.state.terms.join(", ");
    el<HTMLInputElement>("#pair-a").value = this.state.pair?.a ?? "";
    el<HTMLInputElement>("#pair-b").value = this.state.pair?.b ?? "";
    el<HTMLSelectElement>("#group").value = this.state.group ?? "";
    el<HTMLInputElement>("#anchor").value = this.state.anchor ?? "";
    el<HTMLInputElement>("#from").value = this.state.from === null ? "" : String(this.state.from);
    el<HTMLInputElement>("#to").value = this.state.to === null ? "" : String(this.state.to);
    el<HTMLSelectElement>("#mode").value = this.state.mode;
    el<HTMLInputElement>("#k").value = String(this.state.k);
    this.syncRegions();
    for (const button of document.querySelectorAll<HTMLButtonElement>("nav button")) {
      button.classList.toggle("active", button.dataset.view === this.state.view);
    }
    document.body.dataset.view = this.state.view;
  }

  private syncRegions(): void {
    const region = el<HTMLSelectElement>("#region");
    const group = this.meta?.groups.find((g) => g.name === this.state.group);
    const names = group ? Object.keys(group.regions) : [];
    region.innerHTML =
      `<option value="">whole group</option>` + names.map((n) => `<option>${n}</option>`).join("");
    region.value = this.state.region && names.includes(this.state.region) ? this.state.region : "";
  }

  private bindEvents(): void {
    for (const button of document.querySelectorAll<HTMLButtonElement>("nav button")) {
      button.addEventListener("click", () => {
        this.state.view = (button.dataset.view ?? "trend") as ViewMode;
        this.syncControls();
        this.dispatch();
      });
    }
    const read = () => {
      this.state.terms = el<HTMLInputElement>("#terms")
        .value.split(",")
        .map((t) => t.trim())
        .filter(Boolean);
      const a = el<HTMLInputElement>("#pair-a").value.trim();
      const b = el<HTMLInputElement>("#pair-b").value.trim();
      this.state.pair = a && b ? { a, b } : null;
      this.state.group = el<HTMLSelectElement>("#group").value || null;
      this.state.anchor = el<HTMLInputElement>("#anchor").value.trim() || null;
      this.state.region = el<HTMLSelectElement>("#region").value || null;
      const from = el<HTMLInputElement>("#from").value;
      const to = el<HTMLInputElement>("#to").value;
      this.state.from = /^\d+$/.test(from) ? parseInt(from, 10) : null;
      this.state.to = /^\d+$/.test(to) ? parseInt(to, 10) : null;
      this.state.mode = el<HTMLSelectElement>("#mode").value === "tf" ? "tf" : "df";
      const k = parseInt(el<HTMLInputElement>("#k").value, 10);
      this.state.k = Number.isFinite(k) && k >= 1 ? k : DEFAULT_STATE.k;
    };
    for (const input of document.querySelectorAll<HTMLElement>("#controls input, #controls select")) {
      input.addEventListener("input", () => {
        const grouped = input.id === "group";
        read();
        if (grouped) this.syncRegions();
        this.dispatch();
      });
    }
    el("#view").addEventListener("click", (event) => {
      const marker = (event.target as HTMLElement).closest<HTMLElement>("[data-term]");
      if (!marker || !marker.dataset.term) return;
      this.state = withTerm(this.state, marker.dataset.term);
      this.syncControls();
      this.dispatch();
    });
    window.addEventListener("popstate", () => {
      this.state = decodeState(location.search);
      this.syncControls();
      void this.run();
    });
  }
}

new App().start();
