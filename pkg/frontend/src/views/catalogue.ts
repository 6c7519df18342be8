/** Catalogue: the filtered dataset list and the interactive map view.
 *
 * The list renders exactly one API page; the map renders exactly the
 * markers the API returned for the current viewport. Clicking a marker
 * narrows the list to the records /api/markers/at reports for that point.
 * Toggling between list and map keeps the active filters (they live in
 * the URL hash).
 */

import type { ApiClient } from "../api.js";
import { h, clear } from "../dom.js";
import { parseQueryString, toQueryString } from "../filters.js";
import { MarkerMap } from "../mapview.js";
import type { MarkerDto, PublicRecordView } from "../types.js";
import { compareTray, datasetCard, pagination, queryForm, retryBanner } from "../widgets.js";
import type { ViewContext } from "./landing.js";

export function renderCatalogue(container: HTMLElement, ctx: ViewContext,
                                queryString: string, mode: "list" | "map"): void {
  clear(container);
  const state = parseQueryString(queryString);
  const canonical = toQueryString(state);

  const modeHash = (m: string) =>
    `#/datasets${m === "map" ? "/map" : ""}?${canonical}`;
  const toggle = h("nav", { class: "mode-toggle", "aria-label": "View mode" },
    h("a", { href: modeHash("list"),
      ...(mode === "list" ? { "aria-current": "page" } : {}),
      onclick: (event: Event) => { event.preventDefault(); ctx.navigate(modeHash("list")); } },
      "List view"),
    " | ",
    h("a", { href: modeHash("map"),
      ...(mode === "map" ? { "aria-current": "page" } : {}),
      onclick: (event: Event) => { event.preventDefault(); ctx.navigate(modeHash("map")); } },
      "Map view"));

  const results = h("div", { class: "results" });
  container.append(
    h("h1", {}, "Data catalogue"),
    queryForm(state, (next) =>
      ctx.navigate(`#/datasets${mode === "map" ? "/map" : ""}?${toQueryString(next)}`)),
    toggle,
    results,
    compareTray(ctx.navigate));

  if (mode === "list") {
    renderList(results, ctx, canonical);
  } else {
    renderMap(results, ctx, canonical);
  }
}

function renderList(results: HTMLElement, ctx: ViewContext,
                    canonical: string): void {
  const load = async () => {
    clear(results);
    try {
      const page = await ctx.client.listDatasets(canonical);
      if (page.items.length === 0) {
        results.append(h("p", { class: "empty" },
          page.total === 0 ? "No datasets match this query."
            : "This page is past the end of the results."));
      } else {
        results.append(...page.items.map((r) => datasetCard(r, ctx.navigate)));
      }
      results.append(pagination(page.page, page.per_page, page.total, (next) => {
        const state = parseQueryString(canonical);
        state.page = next;
        ctx.navigate(`#/datasets?${toQueryString(state)}`);
      }));
    } catch {
      results.append(retryBanner("Search failed.", load));
    }
  };
  void load();
}

function renderMap(results: HTMLElement, ctx: ViewContext,
                   canonical: string): void {
  const listPane = h("div", { class: "map-list" });
  let narrowed: MarkerDto | null = null;

  const showAllMatching = async () => {
    clear(listPane);
    try {
      const page = await ctx.client.listDatasets(canonical);
      listPane.append(
        h("h2", {}, `Matching datasets (${page.total})`),
        ...page.items.map((r) => datasetCard(r, ctx.navigate)));
    } catch {
      listPane.append(retryBanner("Could not load the dataset list.",
        () => void showAllMatching()));
    }
  };

  const showAtMarker = async (marker: MarkerDto) => {
    clear(listPane);
    try {
      const at = await ctx.client.markersAt(marker.lat, marker.lon);
      listPane.append(
        h("h2", {}, `Datasets at ${marker.label} (${at.items.length})`),
        h("button", { type: "button", onclick: () => {
          narrowed = null;
          void showAllMatching();
        } }, "Show all matching datasets"),
        ...at.items.map((r: PublicRecordView) => datasetCard(r, ctx.navigate)));
    } catch {
      listPane.append(retryBanner("Could not load datasets for this marker.",
        () => void showAtMarker(marker)));
    }
  };

  const map = new MarkerMap({
    onViewportChange: (bbox) => {
      ctx.client.markers(bbox)
        .then((body) => map.setMarkers(body.markers))
        .catch(() => map.markStale(
          "Marker refresh failed; showing the previous markers."));
    },
    onMarkerClick: (marker) => {
      narrowed = marker;
      void showAtMarker(marker);
    },
  });

  results.append(map.element, listPane);
  ctx.client.markers(map.bbox())
    .then((body) => map.setMarkers(body.markers))
    .catch(() => map.markStale("Could not load markers."));
  void showAllMatching();
}
