/** Shared view fragments: query form, dataset cards, compare tray,
 * failure banner, pagination. */

import { h, clear } from "./dom.js";
import {
  FacetMode, LocationKind, QueryFormState, SENSOR_OPTIONS, TASK_OPTIONS,
  displayName, emptyForm,
} from "./filters.js";
import { onTrayChange, trayClear, trayEntries, trayHas, trayToggle } from "./state.js";
import type { PublicRecordView } from "./types.js";

export function retryBanner(message: string, onRetry: () => void): HTMLElement {
  return h("div", { class: "banner error", role: "alert" },
    h("span", {}, message + " "),
    h("button", { type: "button", onclick: onRetry }, "Retry"));
}

function facetGroup(legend: string, options: readonly string[], prefix: string,
                    selected: string[], mode: FacetMode): HTMLElement {
  const boxes = options.map((token) =>
    h("label", { class: "facet-option", for: `${prefix}-${token}` },
      h("input", {
        type: "checkbox", id: `${prefix}-${token}`, value: token,
        name: prefix, ...(selected.includes(token) ? { checked: true } : {}),
      }),
      ` ${displayName(token)}`));
  return h("fieldset", { class: "facet" },
    h("legend", {}, legend),
    ...boxes,
    h("label", { class: "mode", for: `${prefix}-mode` },
      h("input", {
        type: "checkbox", id: `${prefix}-mode`, name: `${prefix}-mode`,
        ...(mode === "and" ? { checked: true } : {}),
      }),
      " match all selected (AND; unchecked = OR)"));
}

/** The query form mirrors QueryFormState exactly; reading it back out is
 * formStateFromInputs. Location choices are radio buttons, so the three
 * location inputs are mutually exclusive by construction. */
export function queryForm(initial: QueryFormState,
                          onSearch: (state: QueryFormState) => void): HTMLElement {
  const form = h("form", { class: "query-form", "aria-label": "Dataset query" },
    facetGroup("Sensor technology", SENSOR_OPTIONS, "sensors",
      initial.sensors, initial.sensorsMode),
    facetGroup("Task / application", TASK_OPTIONS, "tasks",
      initial.tasks, initial.tasksMode),
    h("fieldset", { class: "location" },
      h("legend", {}, "Location"),
      h("label", { for: "loc-none" },
        h("input", { type: "radio", name: "loc-kind", id: "loc-none", value: "none",
          ...(initial.locationKind === "none" ? { checked: true } : {}) }),
        " anywhere"),
      h("label", { for: "loc-text" },
        h("input", { type: "radio", name: "loc-kind", id: "loc-text", value: "text",
          ...(initial.locationKind === "text" ? { checked: true } : {}) }),
        " place name contains "),
      h("input", { type: "text", id: "loc-text-value", "aria-label": "Place name",
        value: initial.locationText }),
      h("label", { for: "loc-near" },
        h("input", { type: "radio", name: "loc-kind", id: "loc-near", value: "near",
          ...(initial.locationKind === "near" ? { checked: true } : {}) }),
        " near point "),
      h("input", { type: "number", id: "loc-near-lat", step: "any",
        "aria-label": "Latitude", value: String(initial.nearLat) }),
      h("input", { type: "number", id: "loc-near-lon", step: "any",
        "aria-label": "Longitude", value: String(initial.nearLon) }),
      h("input", { type: "number", id: "loc-near-radius", step: "any", min: "1",
        "aria-label": "Radius in km", value: String(initial.nearRadiusKm) }),
      h("label", { for: "loc-multi" },
        h("input", { type: "radio", name: "loc-kind", id: "loc-multi", value: "multi",
          ...(initial.locationKind === "multi" ? { checked: true } : {}) }),
        " covers multiple locations")),
    h("button", { type: "submit" }, "Search"));
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    onSearch(formStateFromInputs(form));
  });
  return form;
}

export function formStateFromInputs(form: HTMLElement): QueryFormState {
  const state = emptyForm();
  const checkedValues = (name: string): string[] =>
    [...form.querySelectorAll(`input[name="${name}"]:checked`)]
      .map((el) => (el as HTMLInputElement).value).sort();
  state.sensors = checkedValues("sensors");
  state.tasks = checkedValues("tasks");
  const modeOf = (id: string): FacetMode =>
    (form.querySelector(`#${id}`) as HTMLInputElement | null)?.checked ? "and" : "or";
  state.sensorsMode = modeOf("sensors-mode");
  state.tasksMode = modeOf("tasks-mode");
  const kind = (form.querySelector('input[name="loc-kind"]:checked') as
    HTMLInputElement | null)?.value as LocationKind | undefined;
  state.locationKind = kind ?? "none";
  const num = (id: string): number =>
    Number((form.querySelector(`#${id}`) as HTMLInputElement | null)?.value ?? "0");
  state.locationText =
    (form.querySelector("#loc-text-value") as HTMLInputElement | null)?.value ?? "";
  state.nearLat = num("loc-near-lat");
  state.nearLon = num("loc-near-lon");
  state.nearRadiusKm = num("loc-near-radius");
  if (state.locationKind === "text" && state.locationText.trim() === "") {
    state.locationKind = "none";
  }
  return state;
}

export function datasetCard(record: PublicRecordView,
                            navigate: (hash: string) => void): HTMLElement {
  const inTray = trayHas(record.id);
  return h("article", { class: "dataset-card", "data-id": record.id },
    h("img", { src: record.teaser_url, alt: `Teaser image for ${record.name}`,
      class: "teaser", loading: "lazy" }),
    h("h3", {},
      h("a", { href: `#/datasets/${record.slug}`, onclick: (event: Event) => {
        event.preventDefault();
        navigate(`#/datasets/${record.slug}`);
      } }, record.name)),
    h("p", { class: "meta" },
      `${record.location} · ${record.sensors.map(displayName).join(", ")} · ` +
      `${record.tasks.map(displayName).join(", ")} · ${record.size} · ` +
      `${record.view_count} views`),
    h("p", { class: "description" }, record.description),
    h("button", { type: "button", class: "tray-toggle",
      onclick: () => trayToggle(record) },
      inTray ? "Remove from compare" : "Add to compare"));
}

export function compareTray(navigate: (hash: string) => void): HTMLElement {
  const tray = h("aside", { class: "compare-tray", "aria-label": "Compare tray" });
  const render = () => {
    clear(tray);
    const entries = trayEntries();
    if (entries.length === 0) {
      tray.hidden = true;
      return;
    }
    tray.hidden = false;
    tray.append(
      h("strong", {}, `Compare (${entries.length}): `),
      h("span", {}, entries.map(([, name]) => name).join(" | ") + " "),
      h("button", {
        type: "button",
        ...(entries.length >= 2 ? {} : { disabled: true }),
        onclick: () => navigate(`#/compare?ids=${entries.map(([id]) => id).join(",")}`),
      }, "Compare side by side"),
      h("button", { type: "button", onclick: () => trayClear() }, "Clear"));
  };
  render();
  onTrayChange(render);
  return tray;
}

export function pagination(page: number, perPage: number, total: number,
                           onPage: (page: number) => void): HTMLElement {
  const pages = Math.max(1, Math.ceil(total / perPage));
  return h("nav", { class: "pagination", "aria-label": "Pagination" },
    h("button", { type: "button", ...(page > 1 ? {} : { disabled: true }),
      onclick: () => onPage(page - 1) }, "Previous"),
    h("span", {}, ` page ${page} of ${pages} (${total} datasets) `),
    h("button", { type: "button", ...(page < pages ? {} : { disabled: true }),
      onclick: () => onPage(page + 1) }, "Next"));
}
