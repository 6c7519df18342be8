/** Runtime configuration. The API base URL is the single injected value:
 * set `window.EOD_API_BASE` before loading the bundle (empty string means
 * same-origin). The basemap tile template is optional; without it the map
 * renders a plain graticule background. */

export function apiBase(): string {
  const value = (globalThis as Record<string, unknown>)["EOD_API_BASE"];
  return typeof value === "string" ? value.replace(/\/$/, "") : "";
}

export function tileTemplate(): string | null {
  const value = (globalThis as Record<string, unknown>)["EOD_TILE_TEMPLATE"];
  return typeof value === "string" && value.length > 0 ? value : null;
}
