/** Landing page: the query form plus "recently added" and "most popular"
 * panels. A panel click opens the dataset's detail view. */

import type { ApiClient } from "../api.js";
import { h, clear } from "../dom.js";
import { emptyForm, toQueryString } from "../filters.js";
import type { PublicRecordView } from "../types.js";
import { queryForm, retryBanner } from "../widgets.js";

export interface ViewContext {
  client: ApiClient;
  navigate(hash: string): void;
}

function panel(title: string, records: PublicRecordView[],
               navigate: (hash: string) => void): HTMLElement {
  const list = records.length === 0
    ? h("p", { class: "empty" }, "Nothing in the catalogue yet.")
    : h("ul", {}, ...records.map((record) =>
        h("li", {},
          h("a", { href: `#/datasets/${record.slug}`, onclick: (event: Event) => {
            event.preventDefault();
            navigate(`#/datasets/${record.slug}`);
          } }, record.name),
          ` — ${record.location}, ${record.view_count} views`)));
  return h("section", { class: "panel" }, h("h2", {}, title), list);
}

export function renderLanding(container: HTMLElement, ctx: ViewContext): void {
  clear(container);
  const panels = h("div", { class: "panels" });
  container.append(
    h("h1", {}, "Find Earth-observation datasets"),
    queryForm(emptyForm(), (state) =>
      ctx.navigate(`#/datasets?${toQueryString(state)}`)),
    panels);

  const load = async () => {
    clear(panels);
    try {
      const [recent, popular] = await Promise.all([
        ctx.client.recent(5), ctx.client.popular(5)]);
      panels.append(
        panel("Recently added", recent.items, ctx.navigate),
        panel("Most popular", popular.items, ctx.navigate));
    } catch {
      panels.append(retryBanner("Could not reach the catalogue API.", load));
    }
  };
  void load();
}
