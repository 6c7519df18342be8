/** Equirectangular map math: viewport <-> bbox <-> screen, with proper
 * antimeridian wraparound. Pure functions, no DOM. */

import type { BboxParam } from "./api.js";

export interface Viewport {
  centerLat: number;
  centerLon: number;
  /** full longitudinal span of the pane, degrees (smaller = zoomed in) */
  lonSpan: number;
}

export const WORLD: Viewport = { centerLat: 20, centerLon: 0, lonSpan: 360 };

export function normalizeLon(lon: number): number {
  const wrapped = ((lon + 180) % 360 + 360) % 360 - 180;
  return wrapped;
}

export function clampLat(lat: number): number {
  return Math.max(-90, Math.min(90, lat));
}

/** Degrees of latitude shown, derived from the pane's aspect ratio. */
export function latSpan(view: Viewport, width: number, height: number): number {
  return Math.min(180, view.lonSpan * (height / width));
}

export function viewportBbox(view: Viewport, width: number, height: number): BboxParam {
  const half = view.lonSpan / 2;
  const halfLat = latSpan(view, width, height) / 2;
  return {
    south: clampLat(view.centerLat - halfLat),
    west: view.lonSpan >= 360 ? -180 : normalizeLon(view.centerLon - half),
    north: clampLat(view.centerLat + halfLat),
    east: view.lonSpan >= 360 ? 180 : normalizeLon(view.centerLon + half),
  };
}

/** Signed longitudinal offset from the viewport center, in [-180, 180). */
export function lonOffset(lon: number, centerLon: number): number {
  return normalizeLon(lon - centerLon);
}

export interface ScreenPoint {
  x: number;
  y: number;
}

export function project(lat: number, lon: number, view: Viewport,
                        width: number, height: number): ScreenPoint {
  const x = width / 2 + (lonOffset(lon, view.centerLon) / view.lonSpan) * width;
  const span = latSpan(view, width, height);
  const y = height / 2 - ((lat - view.centerLat) / span) * height;
  return { x, y };
}

export function unproject(x: number, y: number, view: Viewport,
                          width: number, height: number): { lat: number; lon: number } {
  const lon = normalizeLon(view.centerLon + ((x - width / 2) / width) * view.lonSpan);
  const span = latSpan(view, width, height);
  const lat = clampLat(view.centerLat - ((y - height / 2) / height) * span);
  return { lat, lon };
}

export function pan(view: Viewport, dxPx: number, dyPx: number,
                    width: number, height: number): Viewport {
  const span = latSpan(view, width, height);
  return {
    centerLat: clampLat(view.centerLat + (dyPx / height) * span),
    centerLon: normalizeLon(view.centerLon - (dxPx / width) * view.lonSpan),
    lonSpan: view.lonSpan,
  };
}

export function zoom(view: Viewport, factor: number): Viewport {
  const lonSpan = Math.max(1, Math.min(360, view.lonSpan * factor));
  return { ...view, lonSpan };
}

export function bboxToParamString(bbox: BboxParam): string {
  return `${bbox.south},${bbox.west},${bbox.north},${bbox.east}`;
}
