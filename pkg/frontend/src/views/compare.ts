/** Side-by-side comparison: columns are datasets, rows are the fixed
 * detail fields, exactly as the API lays them out. */

import { ApiError } from "../api.js";
import { h, clear } from "../dom.js";
import { retryBanner } from "../widgets.js";
import type { ViewContext } from "./landing.js";

export function renderCompare(container: HTMLElement, ctx: ViewContext,
                              ids: string[]): void {
  clear(container);
  container.append(h("h1", {}, "Compare datasets"));
  const body = h("div", { class: "compare" });
  container.append(body);

  if (ids.length < 2) {
    body.append(h("p", { class: "empty" },
      "Pick at least two datasets to compare."));
    return;
  }

  const load = async () => {
    clear(body);
    try {
      const table = await ctx.client.compare(ids);
      body.append(h("table", { class: "compare-table" },
        h("thead", {}, h("tr", {},
          h("th", { scope: "col" }, "Field"),
          ...table.column_names.map((name) => h("th", { scope: "col" }, name)))),
        h("tbody", {}, ...table.rows.map((row) =>
          h("tr", {},
            h("th", { scope: "row" }, row.label),
            ...row.values.map((value) => h("td", {}, value)))))));
    } catch (error) {
      if (error instanceof ApiError && error.status === 404) {
        body.append(h("p", { class: "empty" },
          "One of the selected datasets no longer exists or is not public."));
      } else if (error instanceof ApiError && error.status === 400) {
        body.append(h("p", { class: "empty" }, error.detail));
      } else {
        body.append(retryBanner("Comparison failed.", load));
      }
    }
  };
  void load();
}
