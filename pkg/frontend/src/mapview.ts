/** Interactive marker map: an equirectangular SVG pane with drag-pan,
 * zoom buttons, and bbox-driven marker loading. Marker data always comes
 * from the API; this component only draws what it is given. */

import { h, svgEl, clear } from "./dom.js";
import type { MarkerDto } from "./types.js";
import {
  Viewport, WORLD, pan, project, viewportBbox, zoom,
} from "./mapmath.js";
import type { BboxParam } from "./api.js";

export interface MapCallbacks {
  /** viewport changed: fetch markers for this bbox and call setMarkers */
  onViewportChange(bbox: BboxParam): void;
  onMarkerClick(marker: MarkerDto): void;
}

export class MarkerMap {
  readonly element: HTMLElement;
  private view: Viewport = { ...WORLD };
  private markers: MarkerDto[] = [];
  private readonly width = 720;
  private readonly height = 360;
  private readonly svg: SVGElement;
  private readonly warning: HTMLElement;

  constructor(private readonly callbacks: MapCallbacks) {
    this.svg = svgEl("svg", {
      viewBox: `0 0 ${this.width} ${this.height}`,
      width: "100%",
      role: "img",
      "aria-label": "Dataset locations map",
      style: "background:#dbe9f4;border:1px solid #9bb;touch-action:none;cursor:grab",
    });
    this.warning = h("p", { class: "map-warning", role: "status", hidden: true });
    this.element = h("div", { class: "marker-map" },
      h("div", { class: "map-controls" },
        h("button", { type: "button", "aria-label": "Zoom in",
          onclick: () => this.applyView(zoom(this.view, 0.5)) }, "+"),
        h("button", { type: "button", "aria-label": "Zoom out",
          onclick: () => this.applyView(zoom(this.view, 2.0)) }, "−"),
        h("button", { type: "button", "aria-label": "Reset view",
          onclick: () => this.applyView({ ...WORLD }) }, "world"),
      ),
      this.svg as unknown as HTMLElement,
      this.warning,
    );
    this.attachDrag();
    this.draw();
  }

  bbox(): BboxParam {
    return viewportBbox(this.view, this.width, this.height);
  }

  setMarkers(markers: MarkerDto[]): void {
    this.markers = markers;
    this.warning.hidden = true;
    this.draw();
  }

  /** keep the stale marker set but tell the user the refresh failed */
  markStale(message: string): void {
    this.warning.textContent = message;
    this.warning.hidden = false;
  }

  renderedMarkerIds(): string[] {
    return [...this.svg.querySelectorAll("[data-record-id]")]
      .map((node) => node.getAttribute("data-record-id") ?? "");
  }

  private applyView(next: Viewport): void {
    this.view = next;
    this.draw();
    this.callbacks.onViewportChange(this.bbox());
  }

  private attachDrag(): void {
    let dragging: { x: number; y: number } | null = null;
    this.svg.addEventListener("pointerdown", (event) => {
      const e = event as PointerEvent;
      dragging = { x: e.clientX, y: e.clientY };
    });
    this.svg.addEventListener("pointerup", (event) => {
      const e = event as PointerEvent;
      if (!dragging) return;
      const dx = e.clientX - dragging.x;
      const dy = e.clientY - dragging.y;
      dragging = null;
      if (Math.abs(dx) + Math.abs(dy) > 3) {
        this.applyView(pan(this.view, dx, dy, this.width, this.height));
      }
    });
  }

  private draw(): void {
    clear(this.svg);
    for (let lon = -180; lon <= 180; lon += 30) {
      const { x } = project(0, lon, this.view, this.width, this.height);
      if (x >= 0 && x <= this.width) {
        this.svg.append(svgEl("line", {
          x1: String(x), y1: "0", x2: String(x), y2: String(this.height),
          stroke: "#c2d4e2", "stroke-width": "1",
        }));
      }
    }
    for (let lat = -60; lat <= 60; lat += 30) {
      const { y } = project(lat, this.view.centerLon, this.view,
        this.width, this.height);
      if (y >= 0 && y <= this.height) {
        this.svg.append(svgEl("line", {
          x1: "0", y1: String(y), x2: String(this.width), y2: String(y),
          stroke: "#c2d4e2", "stroke-width": "1",
        }));
      }
    }
    for (const marker of this.markers) {
      const { x, y } = project(marker.lat, marker.lon, this.view,
        this.width, this.height);
      if (x < -10 || x > this.width + 10 || y < -10 || y > this.height + 10) {
        continue;
      }
      const dot = svgEl("circle", {
        cx: String(x), cy: String(y), r: "6",
        fill: "#c43", stroke: "#fff", "stroke-width": "1.5",
        "data-record-id": marker.record_id,
        role: "button",
        tabindex: "0",
        "aria-label": `Show datasets at ${marker.label}`,
        style: "cursor:pointer",
      });
      const title = svgEl("title");
      title.textContent = marker.label;
      dot.append(title);
      dot.addEventListener("click", () => this.callbacks.onMarkerClick(marker));
      dot.addEventListener("keydown", (event) => {
        if ((event as KeyboardEvent).key === "Enter") {
          this.callbacks.onMarkerClick(marker);
        }
      });
      this.svg.append(dot);
    }
  }
}
