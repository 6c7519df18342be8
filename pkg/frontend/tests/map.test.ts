/** Map math and the marker layer: what the API returns is exactly what
 * gets drawn (no client-side filtering), wraparound included. */

import { describe, expect, it } from "vitest";

import {
  WORLD, normalizeLon, pan, project, unproject, viewportBbox, zoom,
} from "../src/mapmath.js";
import { MarkerMap } from "../src/mapview.js";
import type { DatasetPage, MarkerDto } from "../src/types.js";
import { recorded } from "./helpers.js";

const recordedMarkers =
  (recorded.responses["GET /api/markers"]!.body as { markers: MarkerDto[] }).markers;

describe("map math", () => {
  it("normalizes longitudes into [-180, 180)", () => {
    expect(normalizeLon(0)).toBe(0);
    expect(normalizeLon(180)).toBe(-180);
    expect(normalizeLon(-180)).toBe(-180);
    expect(normalizeLon(190)).toBe(-170);
    expect(normalizeLon(-190)).toBe(170);
    expect(normalizeLon(540)).toBe(-180);
  });

  it("world viewport covers everything", () => {
    const bbox = viewportBbox(WORLD, 720, 360);
    expect(bbox.west).toBe(-180);
    expect(bbox.east).toBe(180);
    expect(bbox.south).toBeLessThanOrEqual(-70);
    expect(bbox.north).toBeGreaterThanOrEqual(70);
  });

  it("a zoomed view near the antimeridian produces a wraparound bbox", () => {
    const view = { centerLat: 0, centerLon: 178, lonSpan: 20 };
    const bbox = viewportBbox(view, 720, 360);
    expect(bbox.west).toBe(168);
    expect(bbox.east).toBe(-172);
    expect(bbox.west).toBeGreaterThan(bbox.east); // wraparound shape
  });

  it("panning wraps the center longitude", () => {
    const view = { centerLat: 0, centerLon: 170, lonSpan: 90 };
    const panned = pan(view, -360, 0, 720, 360); // drag half a pane west
    expect(panned.centerLon).toBe(-145);
  });

  it("project and unproject are inverse at the pane center", () => {
    const view = { centerLat: 30, centerLon: 100, lonSpan: 60 };
    const { x, y } = project(30, 100, view, 720, 360);
    expect(x).toBeCloseTo(360);
    expect(y).toBeCloseTo(180);
    const back = unproject(x, y, view, 720, 360);
    expect(back.lat).toBeCloseTo(30);
    expect(back.lon).toBeCloseTo(100);
  });

  it("zoom clamps the span into [1, 360]", () => {
    expect(zoom(WORLD, 4).lonSpan).toBe(360);
    expect(zoom({ ...WORLD, lonSpan: 3 }, 0.1).lonSpan).toBe(1);
  });
});

describe("marker layer", () => {
  function buildMap(onClick: (marker: MarkerDto) => void = () => undefined) {
    return new MarkerMap({
      onViewportChange: () => undefined,
      onMarkerClick: onClick,
    });
  }

  it("renders exactly the marker set the API returned", () => {
    const map = buildMap();
    document.body.append(map.element);
    map.setMarkers(recordedMarkers);
    const rendered = map.renderedMarkerIds().sort();
    const fromApi = recordedMarkers.map((m) => m.record_id).sort();
    expect(rendered).toEqual(fromApi);
    map.element.remove();
  });

  it("multi-location records never appear as markers", () => {
    const page = recorded.responses["GET /api/datasets"]!.body as DatasetPage;
    const multiIds = page.items
      .filter((item) => item.location === "multiple")
      .map((item) => item.id);
    expect(multiIds.length).toBeGreaterThan(0); // the fixture has some
    const markerIds = new Set(recordedMarkers.map((m) => m.record_id));
    for (const id of multiIds) {
      expect(markerIds.has(id)).toBe(false);
    }
    const map = buildMap();
    map.setMarkers(recordedMarkers);
    for (const id of multiIds) {
      expect(map.renderedMarkerIds()).not.toContain(id);
    }
  });

  it("clicking a marker reports it", () => {
    const clicks: MarkerDto[] = [];
    const map = buildMap((marker) => clicks.push(marker));
    document.body.append(map.element);
    map.setMarkers(recordedMarkers);
    const first = map.element.querySelector("[data-record-id]");
    (first as unknown as { dispatchEvent(e: Event): void })
      .dispatchEvent(new Event("click"));
    expect(clicks.length).toBe(1);
    expect(clicks[0]!.record_id).toBe(first!.getAttribute("data-record-id"));
    map.element.remove();
  });

  it("a failed refresh keeps the stale markers and shows a warning", () => {
    const map = buildMap();
    map.setMarkers(recordedMarkers);
    map.markStale("Marker refresh failed; showing the previous markers.");
    expect(map.renderedMarkerIds().length).toBe(recordedMarkers.length);
    const warning = map.element.querySelector(".map-warning") as HTMLElement;
    expect(warning.hidden).toBe(false);
    expect(warning.textContent).toContain("previous markers");
  });

  it("every rendered marker is accessible (role + label)", () => {
    const map = buildMap();
    map.setMarkers(recordedMarkers);
    for (const dot of map.element.querySelectorAll("[data-record-id]")) {
      expect(dot.getAttribute("role")).toBe("button");
      expect(dot.getAttribute("aria-label")).toMatch(/Show datasets at /);
    }
  });
});
