/** Dataset detail: every public field, the teaser, the download link, and
 * the compare-tray toggle. Each visit is one view-count event server-side. */

import { ApiError } from "../api.js";
import { h, clear } from "../dom.js";
import { displayName } from "../filters.js";
import { trayHas, trayToggle } from "../state.js";
import { compareTray, retryBanner } from "../widgets.js";
import type { ViewContext } from "./landing.js";

export function renderDetail(container: HTMLElement, ctx: ViewContext,
                             slug: string): void {
  clear(container);
  const body = h("div", { class: "detail" });
  container.append(body, compareTray(ctx.navigate));

  const load = async () => {
    clear(body);
    try {
      const record = await ctx.client.detail(slug);
      body.append(
        h("h1", {}, record.name),
        h("img", { src: record.teaser_url, alt: `Teaser image for ${record.name}`,
          class: "teaser-large" }),
        h("dl", { class: "fields" },
          h("dt", {}, "Geographic location"), h("dd", {}, record.location),
          h("dt", {}, "Sensor modality"),
          h("dd", {}, record.sensors.map(displayName).join(", ")),
          h("dt", {}, "Task / application"),
          h("dd", {}, record.tasks.map(displayName).join(", ")),
          h("dt", {}, "Size"), h("dd", {}, record.size),
          h("dt", {}, "Download"),
          h("dd", {}, h("a", { href: record.download_url, rel: "noopener" },
            record.download_url)),
          h("dt", {}, "Published on"), h("dd", {}, record.published_on),
          h("dt", {}, "Number of views"), h("dd", {}, String(record.view_count)),
          h("dt", {}, "Description"), h("dd", {}, record.description)),
        h("button", { type: "button", onclick: () => {
          trayToggle(record);
          renderDetail(container, ctx, slug);
        } }, trayHas(record.id) ? "Remove from compare" : "Add to compare"));
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        body.append(h("p", { class: "empty" },
          "This dataset does not exist or is not public."));
      } else {
        body.append(retryBanner("Could not load the dataset.", load));
      }
    }
  };
  void load();
}
