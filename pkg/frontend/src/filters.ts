/** The query form's state and its wire form.
 *
 * `toQueryString` mirrors the server's canonical printer exactly: facet
 * tokens sorted and comma-joined, fixed key order (sensors, sensors_mode,
 * tasks, tasks_mode, one location key, page, per_page), form-urlencoded.
 * The server parses it back to the same filters, which is what the
 * recorded-API contract tests pin down.
 */

export type FacetMode = "and" | "or";
export type LocationKind = "none" | "text" | "near" | "multi";

export const SENSOR_OPTIONS = [
  "optical", "multispectral", "hyperspectral", "sar", "laser_scanning",
  "thermal",
] as const;

export const TASK_OPTIONS = [
  "object_detection", "semantic_segmentation", "instance_segmentation",
  "scene_classification", "regression", "change_detection",
] as const;

export const DISPLAY_NAMES: Record<string, string> = {
  optical: "Optical",
  multispectral: "Multispectral",
  hyperspectral: "Hyperspectral",
  sar: "SAR",
  laser_scanning: "Laser scanning",
  thermal: "Thermal",
  object_detection: "Object detection",
  semantic_segmentation: "Semantic segmentation",
  instance_segmentation: "Instance segmentation",
  scene_classification: "Scene classification",
  regression: "Regression",
  change_detection: "Change detection",
};

export function displayName(token: string): string {
  if (token.startsWith("other:")) {
    return `Other: ${token.slice("other:".length)}`;
  }
  return DISPLAY_NAMES[token] ?? token;
}

export interface QueryFormState {
  sensors: string[];
  sensorsMode: FacetMode;
  tasks: string[];
  tasksMode: FacetMode;
  /** the location inputs are mutually exclusive by construction */
  locationKind: LocationKind;
  locationText: string;
  nearLat: number;
  nearLon: number;
  nearRadiusKm: number;
  page: number;
  perPage: number;
}

export function emptyForm(): QueryFormState {
  return {
    sensors: [],
    sensorsMode: "and",
    tasks: [],
    tasksMode: "and",
    locationKind: "none",
    locationText: "",
    nearLat: 0,
    nearLon: 0,
    nearRadiusKm: 25,
    page: 1,
    perPage: 20,
  };
}

export function toQueryString(state: QueryFormState): string {
  const params = new URLSearchParams();
  if (state.sensors.length > 0) {
    params.append("sensors", [...state.sensors].sort().join(","));
  }
  params.append("sensors_mode", state.sensorsMode);
  if (state.tasks.length > 0) {
    params.append("tasks", [...state.tasks].sort().join(","));
  }
  params.append("tasks_mode", state.tasksMode);
  if (state.locationKind === "multi") {
    params.append("multi_location", "true");
  } else if (state.locationKind === "text" && state.locationText) {
    params.append("location", state.locationText);
  } else if (state.locationKind === "near") {
    params.append("near",
      `${state.nearLat},${state.nearLon},${state.nearRadiusKm}`);
  }
  params.append("page", String(state.page));
  params.append("per_page", String(state.perPage));
  return params.toString();
}

export function parseQueryString(qs: string): QueryFormState {
  const params = new URLSearchParams(qs);
  const state = emptyForm();
  const splitTokens = (value: string | null): string[] =>
    (value ?? "").split(",").map((t) => t.trim()).filter(Boolean).sort();
  state.sensors = splitTokens(params.get("sensors"));
  state.tasks = splitTokens(params.get("tasks"));
  state.sensorsMode = params.get("sensors_mode") === "or" ? "or" : "and";
  state.tasksMode = params.get("tasks_mode") === "or" ? "or" : "and";
  if (params.get("multi_location") === "true") {
    state.locationKind = "multi";
  } else if (params.get("location")) {
    state.locationKind = "text";
    state.locationText = params.get("location") ?? "";
  } else if (params.get("near")) {
    const parts = (params.get("near") ?? "").split(",").map(Number);
    if (parts.length === 3 && parts.every((n) => Number.isFinite(n))) {
      state.locationKind = "near";
      state.nearLat = parts[0]!;
      state.nearLon = parts[1]!;
      state.nearRadiusKm = parts[2]!;
    }
  }
  const page = Number(params.get("page") ?? "1");
  const perPage = Number(params.get("per_page") ?? "20");
  state.page = Number.isInteger(page) && page >= 1 ? page : 1;
  state.perPage = Number.isInteger(perPage) && perPage >= 1 && perPage <= 100
    ? perPage : 20;
  return state;
}
