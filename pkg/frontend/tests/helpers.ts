/** Test plumbing: a fetch stub that replays the recorded API fixtures. */

import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

import { ApiClient, FetchLike } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export interface Recorded {
  query_strings: Record<string, string>;
  responses: Record<string, { status: number; body: unknown }>;
}

export const recorded: Recorded = JSON.parse(
  readFileSync(join(here, "fixtures", "recorded.json"), "utf-8"));

export interface FetchLogEntry {
  url: string;
  method: string;
}

export function recordedFetch(overrides: Record<string, { status: number; body: unknown }> = {},
                              log: FetchLogEntry[] = []): FetchLike {
  return async (input: string, init?: RequestInit) => {
    const method = (init?.method ?? "GET").toUpperCase();
    log.push({ url: input, method });
    const key = `${method} ${input}`;
    let entry = overrides[key] ?? recorded.responses[key];
    if (!entry && method === "POST" && input === "/api/datasets") {
      entry = recorded.responses["POST /api/datasets#invalid"];
    }
    if (!entry) {
      throw new Error(`no recorded response for: ${key}`);
    }
    return new Response(JSON.stringify(entry.body), {
      status: entry.status,
      headers: { "Content-Type": "application/json" },
    });
  };
}

export function recordedClient(overrides: Record<string, { status: number; body: unknown }> = {},
                               log: FetchLogEntry[] = []): ApiClient {
  return new ApiClient("", recordedFetch(overrides, log));
}

/** Let queued microtasks and zero-delay timers run. */
export async function flush(times = 4): Promise<void> {
  for (let i = 0; i < times; i++) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
