/** Client-side pre-validation for the submission form.
 *
 * Deliberately a strict subset of the server rules: anything rejected here
 * would be rejected there too, and the server remains the authority. */

import type { FieldError } from "./types.js";

export const MAX_TEASER_BYTES = 2 * 1024 * 1024;
const EMAIL_RE = /^[^@\s]+@[^@\s]+\.[^@\s]+$/;
const DATE_RE = /^(\d{1,2}\/\d{1,2}\/\d{4}|\d{4}-\d{2}-\d{2})$/;
const SIZE_RE = /^\d+(\.\d{1,2})?$/;

export interface SubmissionFields {
  submitter_name: string;
  submitter_email: string;
  name: string;
  published_on: string;
  multiple_locations: boolean;
  location: string;
  sensors: string[];
  tasks: string[];
  size_value: string;
  size_unit: "MB" | "GB";
  download_url: string;
  description: string;
  teaser: File | null;
}

export function validateSubmission(fields: SubmissionFields): FieldError[] {
  const errors: FieldError[] = [];
  const problem = (field: string, code: string, message: string) =>
    errors.push({ field, code, message });

  const required: Array<[keyof SubmissionFields, string]> = [
    ["submitter_name", "submitter name"],
    ["submitter_email", "submitter email"],
    ["name", "dataset name"],
    ["published_on", "publication date"],
    ["size_value", "size"],
    ["download_url", "download link"],
    ["description", "description"],
  ];
  for (const [field, label] of required) {
    const value = fields[field];
    if (typeof value === "string" && value.trim() === "") {
      problem(field, "missing_field", `${label} is required`);
    }
  }

  if (fields.submitter_email.trim() &&
      !EMAIL_RE.test(fields.submitter_email.trim())) {
    problem("submitter_email", "bad_email", "not a valid email address");
  }
  if (fields.published_on.trim() && !DATE_RE.test(fields.published_on.trim())) {
    problem("published_on", "bad_date", "use MM/DD/YYYY or YYYY-MM-DD");
  }
  if (fields.size_value.trim() && !SIZE_RE.test(fields.size_value.trim())) {
    problem("size_value", "bad_size",
      "a positive number with at most 2 decimals");
  }
  if (fields.download_url.trim() &&
      !/^https?:\/\/.+/.test(fields.download_url.trim())) {
    problem("download_url", "bad_url", "must be an absolute http(s) URL");
  }
  if (fields.sensors.length === 0) {
    problem("sensors", "empty_taxonomy", "select at least one sensor");
  }
  if (fields.tasks.length === 0) {
    problem("tasks", "empty_taxonomy", "select at least one task");
  }
  if (!fields.multiple_locations && fields.location.trim() === "") {
    problem("location", "missing_field",
      "an address is required unless the dataset covers multiple locations");
  }
  if (fields.teaser === null) {
    problem("teaser", "missing_field", "a teaser image is required");
  } else {
    if (fields.teaser.size > MAX_TEASER_BYTES) {
      problem("teaser", "oversize_teaser",
        `teaser is ${fields.teaser.size} bytes; the limit is ${MAX_TEASER_BYTES}`);
    }
    if (!["image/png", "image/jpeg", "image/jpg"].includes(fields.teaser.type)) {
      problem("teaser", "bad_teaser", "teaser must be a PNG or JPEG image");
    }
  }
  return errors;
}

export function toFormData(fields: SubmissionFields): FormData {
  const form = new FormData();
  form.set("submitter_name", fields.submitter_name.trim());
  form.set("submitter_email", fields.submitter_email.trim());
  form.set("name", fields.name.trim());
  form.set("published_on", fields.published_on.trim());
  if (fields.multiple_locations) {
    form.set("multiple_locations", "true");
  } else {
    form.set("location", fields.location.trim());
  }
  form.set("sensors", fields.sensors.join(","));
  form.set("tasks", fields.tasks.join(","));
  form.set("size_value", fields.size_value.trim());
  form.set("size_unit", fields.size_unit);
  form.set("download_url", fields.download_url.trim());
  form.set("description", fields.description.trim());
  if (fields.teaser !== null) {
    form.set("teaser", fields.teaser, fields.teaser.name);
  }
  return form;
}

/** Map server field errors onto form inputs: returns input-id -> message.
 * Field names arrive exactly as the API reports them; inputs carry
 * matching ids of the shape `submit-<field>`. */
export function errorsByInputId(errors: FieldError[]): Map<string, string> {
  const out = new Map<string, string>();
  for (const error of errors) {
    const id = `submit-${error.field}`;
    const existing = out.get(id);
    out.set(id, existing ? `${existing}; ${error.message}` : error.message);
  }
  return out;
}
