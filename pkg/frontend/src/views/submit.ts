/** Submission form: one input per catalogue field, client-side
 * pre-validation (a strict subset of the server's rules), and per-field
 * highlighting of whatever the server rejects. */

import { ApiError } from "../api.js";
import { h, clear } from "../dom.js";
import { SENSOR_OPTIONS, TASK_OPTIONS, displayName } from "../filters.js";
import type { FieldError } from "../types.js";
import {
  MAX_TEASER_BYTES, SubmissionFields, errorsByInputId, toFormData,
  validateSubmission,
} from "../validate.js";
import type { ViewContext } from "./landing.js";

function labelled(id: string, label: string, input: HTMLElement): HTMLElement {
  return h("div", { class: "field", "data-field": id },
    h("label", { for: id }, label),
    input,
    h("p", { class: "field-error", id: `${id}-error`, role: "alert", hidden: true }));
}

function checkboxGroup(prefix: string, legend: string,
                       options: readonly string[]): HTMLElement {
  return h("fieldset", { id: `submit-${prefix}`, class: "field" },
    h("legend", {}, legend),
    ...options.map((token) => h("label", { for: `submit-${prefix}-${token}` },
      h("input", { type: "checkbox", id: `submit-${prefix}-${token}`,
        name: `submit-${prefix}`, value: token }),
      ` ${displayName(token)}`)),
    h("p", { class: "field-error", id: `submit-${prefix}-error`,
      role: "alert", hidden: true }));
}

export function readFields(root: HTMLElement): SubmissionFields {
  const text = (id: string): string =>
    (root.querySelector(`#${id}`) as HTMLInputElement | null)?.value ?? "";
  const checked = (name: string): string[] =>
    [...root.querySelectorAll(`input[name="${name}"]:checked`)]
      .map((el) => (el as HTMLInputElement).value);
  const teaserInput = root.querySelector("#submit-teaser") as HTMLInputElement | null;
  return {
    submitter_name: text("submit-submitter_name"),
    submitter_email: text("submit-submitter_email"),
    name: text("submit-name"),
    published_on: text("submit-published_on"),
    multiple_locations:
      (root.querySelector("#submit-multiple_locations") as HTMLInputElement | null)
        ?.checked ?? false,
    location: text("submit-location"),
    sensors: checked("submit-sensors"),
    tasks: checked("submit-tasks"),
    size_value: text("submit-size_value"),
    size_unit: (text("submit-size_unit") === "GB" ? "GB" : "MB"),
    download_url: text("submit-download_url"),
    description: text("submit-description"),
    teaser: teaserInput?.files?.[0] ?? null,
  };
}

export function showFieldErrors(root: HTMLElement, errors: FieldError[]): void {
  for (const el of root.querySelectorAll(".field-error")) {
    (el as HTMLElement).hidden = true;
    el.textContent = "";
  }
  for (const el of root.querySelectorAll("[aria-invalid]")) {
    el.removeAttribute("aria-invalid");
  }
  for (const [inputId, message] of errorsByInputId(errors)) {
    const slot = root.querySelector(`#${inputId}-error`) as HTMLElement | null;
    if (slot) {
      slot.textContent = message;
      slot.hidden = false;
    }
    root.querySelector(`#${inputId}`)?.setAttribute("aria-invalid", "true");
  }
}

export function renderSubmit(container: HTMLElement, ctx: ViewContext): void {
  clear(container);
  const status = h("div", { class: "submit-status", role: "status" });
  const form = h("form", { class: "submit-form", "aria-label": "Submit a dataset" },
    h("p", {}, "Your name and email are for the moderators only and are never published."),
    labelled("submit-submitter_name", "Submitter name",
      h("input", { type: "text", id: "submit-submitter_name" })),
    labelled("submit-submitter_email", "Submitter email",
      h("input", { type: "email", id: "submit-submitter_email" })),
    labelled("submit-name", "Dataset name (as its authors want it known)",
      h("input", { type: "text", id: "submit-name" })),
    labelled("submit-published_on", "Publication date (MM/DD/YYYY), not the submission date",
      h("input", { type: "text", id: "submit-published_on", placeholder: "MM/DD/YYYY" })),
    h("div", { class: "field" },
      h("label", { for: "submit-multiple_locations" },
        h("input", { type: "checkbox", id: "submit-multiple_locations" }),
        " the dataset covers multiple locations")),
    labelled("submit-location", "Dataset location (address)",
      h("input", { type: "text", id: "submit-location" })),
    checkboxGroup("sensors", "Sensors used", SENSOR_OPTIONS),
    checkboxGroup("tasks", "Tasks the data supports", TASK_OPTIONS),
    labelled("submit-size_value", "Download size",
      h("input", { type: "text", id: "submit-size_value", inputmode: "decimal" })),
    labelled("submit-size_unit", "Size unit",
      h("select", { id: "submit-size_unit" },
        h("option", { value: "MB" }, "MB"),
        h("option", { value: "GB" }, "GB"))),
    labelled("submit-download_url", "Link to the dataset (download URL)",
      h("input", { type: "url", id: "submit-download_url" })),
    labelled("submit-teaser", "Teaser image (PNG or JPEG, max 2 MiB)",
      h("input", { type: "file", id: "submit-teaser", accept: "image/png,image/jpeg" })),
    labelled("submit-description", "Short description (a few concise sentences)",
      h("textarea", { id: "submit-description", rows: "4" })),
    h("button", { type: "submit", id: "submit-go" }, "Submit for review"),
    status);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void processSubmission(readFields(form), form, status, ctx);
  });

  container.append(h("h1", {}, "Submit a new dataset"), form);
}

/** Validate locally, then upload; invalid fields never leave the browser. */
export async function processSubmission(fields: SubmissionFields,
                                        form: HTMLElement, status: HTMLElement,
                                        ctx: ViewContext): Promise<void> {
  clear(status);
  const clientErrors = validateSubmission(fields);
  if (clientErrors.length > 0) {
    showFieldErrors(form, clientErrors);
    status.append(h("p", { class: "error" },
      "Please fix the highlighted fields; nothing was uploaded."));
    return;
  }
  try {
    const accepted = await ctx.client.submit(toFormData(fields));
    const host = form.parentElement ?? form;
    clear(host);
    host.append(
      h("h1", {}, "Thank you!"),
      h("p", { class: "confirmation" },
        `Your submission is pending review (reference ${accepted.id}). ` +
        "It will appear in the catalogue once a curator approves it."));
  } catch (error) {
    if (error instanceof ApiError) {
      if (error.fieldErrors.length > 0) {
        showFieldErrors(form, error.fieldErrors);
      }
      if (error.status === 413) {
        showFieldErrors(form, [{ field: "teaser", code: "oversize_teaser",
          message: "the upload is too large" }]);
        status.append(h("p", { class: "error" },
          "The teaser image is too large (limit 2 MiB)."));
      } else if (error.status === 429) {
        status.append(h("p", { class: "error" },
          "Too many submissions from this address; please wait a while and try again."));
      } else {
        status.append(h("p", { class: "error" },
          "The server rejected the submission; see the highlighted fields."));
      }
    } else {
      status.append(h("p", { class: "error" },
        "Could not reach the catalogue API; your form input is still here — try again."));
    }
  }
}

export { MAX_TEASER_BYTES };
