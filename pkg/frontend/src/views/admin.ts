/** Moderation panel: enter a bearer token (kept in memory only), list the
 * pending queue with submitter details and flags, approve or reject. */

import { ApiError } from "../api.js";
import { h, clear } from "../dom.js";
import { getModeratorToken, setModeratorToken } from "../state.js";
import type { ViewContext } from "./landing.js";

interface AdminRecord {
  id: string;
  name: string;
  description: string;
  download_url: string;
  private?: { submitter_name: string; submitter_email: string; flags: string[] };
}

export function renderAdmin(container: HTMLElement, ctx: ViewContext): void {
  clear(container);
  container.append(h("h1", {}, "Moderation"));
  const body = h("div", { class: "admin" });
  container.append(body);

  const token = getModeratorToken();
  if (!token) {
    renderTokenPrompt(body, ctx, container);
    return;
  }
  void renderQueue(body, ctx, container, token);
}

function renderTokenPrompt(body: HTMLElement, ctx: ViewContext,
                           container: HTMLElement): void {
  const input = h("input", { type: "password", id: "admin-token" });
  const form = h("form", {},
    h("label", { for: "admin-token" }, "Moderator token "),
    input,
    h("button", { type: "submit" }, "Unlock"));
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    setModeratorToken((input as HTMLInputElement).value);
    renderAdmin(container, ctx);
  });
  body.append(
    h("p", {}, "The token stays in this tab's memory and is sent only as a "
      + "bearer header to the admin endpoints."),
    form);
}

async function renderQueue(body: HTMLElement, ctx: ViewContext,
                           container: HTMLElement, token: string): Promise<void> {
  clear(body);
  body.append(h("p", { role: "status" }, "Loading pending submissions…"));
  try {
    const listing = await ctx.client.adminList(token, "pending");
    clear(body);
    const items = listing.items as AdminRecord[];
    body.append(h("p", {},
      `${items.length} pending submission${items.length === 1 ? "" : "s"}. `,
      h("button", { type: "button", onclick: () => {
        setModeratorToken(null);
        renderAdmin(container, ctx);
      } }, "Forget token")));
    for (const item of items) {
      body.append(pendingCard(item, ctx, container, token));
    }
  } catch (error) {
    clear(body);
    if (error instanceof ApiError && error.status === 401) {
      setModeratorToken(null);
      body.append(h("p", { class: "error", role: "alert" },
        "That token was not accepted."));
      renderTokenPrompt(body, ctx, container);
    } else {
      body.append(h("p", { class: "error", role: "alert" },
        "Could not load the moderation queue."));
    }
  }
}

function pendingCard(item: AdminRecord, ctx: ViewContext,
                     container: HTMLElement, token: string): HTMLElement {
  const flags = item.private?.flags ?? [];
  const reason = h("input", { type: "text", "aria-label": `Rejection reason for ${item.name}`,
    placeholder: "rejection reason (optional)" });
  const note = h("p", { class: "moderation-note", role: "status" });
  const act = async (action: "approve" | "reject") => {
    try {
      const result = await ctx.client.moderate(token, item.id, action,
        (reason as HTMLInputElement).value || undefined);
      note.textContent = `${result.status}.`;
      await renderQueue(container.querySelector(".admin") as HTMLElement,
        ctx, container, token);
    } catch (error) {
      note.textContent = error instanceof ApiError
        ? `${error.errorName}: ${error.detail}` : "request failed";
    }
  };
  return h("article", { class: "pending-card", "data-id": item.id },
    h("h3", {}, item.name),
    flags.length > 0
      ? h("p", { class: "flags" }, `Flags: ${flags.join(", ")}`)
      : null,
    h("p", {}, item.description),
    h("p", {}, h("a", { href: item.download_url, rel: "noopener" }, item.download_url)),
    h("p", { class: "submitter" },
      `Submitted by ${item.private?.submitter_name ?? "?"} <${item.private?.submitter_email ?? "?"}>`),
    h("div", { class: "actions" },
      h("button", { type: "button", class: "approve", onclick: () => void act("approve") },
        "Approve"),
      reason,
      h("button", { type: "button", class: "reject", onclick: () => void act("reject") },
        "Reject")),
    note);
}
