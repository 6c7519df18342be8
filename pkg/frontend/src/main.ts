/** Hash router and app bootstrap. Routes:
 *   #/                      landing (query form + recent/popular)
 *   #/datasets?…            catalogue, list view
 *   #/datasets/map?…        catalogue, map view
 *   #/datasets/<slug>       detail
 *   #/compare?ids=a,b,…     side-by-side comparison
 *   #/submit                submission form
 *   #/admin                 moderation panel
 */

import { ApiClient } from "./api.js";
import { renderAdmin } from "./views/admin.js";
import { renderCatalogue } from "./views/catalogue.js";
import { renderCompare } from "./views/compare.js";
import { renderDetail } from "./views/detail.js";
import { renderLanding, ViewContext } from "./views/landing.js";
import { renderSubmit } from "./views/submit.js";

export function route(container: HTMLElement, ctx: ViewContext, hash: string): void {
  const raw = hash.startsWith("#/") ? hash.slice(2) : "";
  const [pathPart = "", queryPart = ""] = raw.split("?", 2);
  const segments = pathPart.split("/").filter(Boolean);

  if (segments.length === 0) {
    renderLanding(container, ctx);
  } else if (segments[0] === "datasets" && segments.length === 1) {
    renderCatalogue(container, ctx, queryPart, "list");
  } else if (segments[0] === "datasets" && segments[1] === "map") {
    renderCatalogue(container, ctx, queryPart, "map");
  } else if (segments[0] === "datasets") {
    renderDetail(container, ctx, segments[1] ?? "");
  } else if (segments[0] === "compare") {
    const ids = (new URLSearchParams(queryPart).get("ids") ?? "")
      .split(",").map((s) => s.trim()).filter(Boolean);
    renderCompare(container, ctx, ids);
  } else if (segments[0] === "submit") {
    renderSubmit(container, ctx);
  } else if (segments[0] === "admin") {
    renderAdmin(container, ctx);
  } else {
    renderLanding(container, ctx);
  }
}

export function start(container: HTMLElement,
                      baseClient: ApiClient = new ApiClient()): () => void {
  let controller: AbortController | null = null;

  const navigate = (hash: string): void => {
    if (window.location.hash === hash) {
      renderCurrent();
    } else {
      window.location.hash = hash;
    }
  };

  // each navigation aborts whatever the previous view still has in flight
  const renderCurrent = (): void => {
    controller?.abort();
    controller = new AbortController();
    const ctx: ViewContext = {
      client: baseClient.withSignal(controller.signal),
      navigate,
    };
    route(container, ctx, window.location.hash);
  };

  window.addEventListener("hashchange", renderCurrent);
  renderCurrent();
  return () => {
    window.removeEventListener("hashchange", renderCurrent);
    controller?.abort();
  };
}

const mount = typeof document !== "undefined"
  ? document.getElementById("app") : null;
if (mount) {
  start(mount);
}
