/** ApiClient: URL construction, typed parsing of recorded bodies, and
 * error objects carrying the server's field-level details. */

import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import type { CompareTable, DatasetPage } from "../src/types.js";
import { FetchLogEntry, recorded, recordedClient, recordedFetch } from "./helpers.js";

describe("request shapes", () => {
  it("builds the documented endpoint paths", async () => {
    const log: FetchLogEntry[] = [];
    const client = recordedClient({}, log);
    await client.listDatasets(recorded.query_strings["worked_example"]!);
    await client.recent(5);
    await client.popular(5);
    await client.markers();
    await client.markersAt(52.52, 13.405);
    expect(log.map((entry) => entry.url)).toEqual([
      `/api/datasets?${recorded.query_strings["worked_example"]}`,
      "/api/datasets/recent?n=5",
      "/api/datasets/popular?n=5",
      "/api/markers",
      "/api/markers/at?lat=52.52&lon=13.405",
    ]);
  });

  it("sends the bearer token only on admin calls", async () => {
    const seen: Array<string | undefined> = [];
    const client = new ApiClient("", async (input, init) => {
      seen.push((init?.headers as Record<string, string> | undefined)?.["Authorization"]);
      return new Response(JSON.stringify({ items: [] }), { status: 200 });
    });
    await client.adminList("secret-token");
    await client.listDatasets("");
    expect(seen).toEqual(["Bearer secret-token", undefined]);
  });
});

describe("typed parsing of recorded bodies", () => {
  it("dataset pages parse with totals", async () => {
    const page: DatasetPage = await recordedClient().listDatasets("");
    expect(page.total).toBe(14);
    expect(page.items.length).toBe(14);
    expect(page.items[0]).toHaveProperty("slug");
    expect(page.items[0]).toHaveProperty("teaser_url");
  });

  it("comparison tables carry the fixed seven rows", async () => {
    const key = Object.keys(recorded.responses)
      .find((k) => k.startsWith("GET /api/compare"))!;
    const ids = key.split("ids=")[1]!.split(",");
    const table: CompareTable = await recordedClient().compare(ids);
    expect(table.columns).toEqual(ids);
    expect(table.rows.map((row) => row.label)).toEqual(
      ["location", "sensors", "tasks", "size", "url", "views", "description"]);
    for (const row of table.rows) {
      expect(row.values.length).toBe(ids.length);
    }
  });

  it("public bodies contain no submitter details", () => {
    const blob = JSON.stringify(recorded.responses);
    // the fixture submitter identity must never surface publicly; the only
    // private block in the recordings is inside no response at all
    expect(blob).not.toContain("curators@example.org");
    expect(blob).not.toContain("Launch Curation Team");
  });
});

describe("error objects", () => {
  it("carries status, name, and field errors from a 400", async () => {
    const client = new ApiClient("", recordedFetch());
    let caught: ApiError | null = null;
    try {
      await client.submit(new FormData());
    } catch (error) {
      caught = error as ApiError;
    }
    expect(caught).toBeInstanceOf(ApiError);
    expect(caught!.status).toBe(400);
    expect(caught!.errorName).toBe("SubmissionInvalid");
    expect(caught!.fieldErrors.map((e) => e.field))
      .toContain("submitter_email");
  });

  it("survives a non-JSON error body", async () => {
    const client = new ApiClient("", async () =>
      new Response("upstream text", { status: 502, statusText: "Bad Gateway" }));
    await expect(client.recent(5)).rejects.toMatchObject({ status: 502 });
  });
});
