/** Typed client for the catalogue API. Every view talks to the server
 * through this module and renders exactly what it returns; the client
 * never re-filters result sets. */

import { apiBase } from "./config.js";
import type {
  CompareTable, DatasetPage, FieldError, MarkerDto, MarkersAtResponse,
  PublicRecordView, SubmissionAccepted,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly errorName: string,
    public readonly detail: string,
    public readonly fieldErrors: FieldError[] = [],
  ) {
    super(`${errorName}: ${detail}`);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface BboxParam {
  south: number;
  west: number;
  north: number;
  east: number;
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(base: string = apiBase(), fetchFn?: FetchLike) {
    this.base = base;
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  /** A client whose requests all carry the given abort signal; the router
   * hands each view one of these and aborts it on navigation. */
  withSignal(signal: AbortSignal): ApiClient {
    const inner = this.fetchFn;
    return new ApiClient(this.base,
      (input, init) => inner(input, { ...init, signal }));
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    if (response.ok) {
      return (await response.json()) as T;
    }
    let errorName = `HTTP ${response.status}`;
    let detail = response.statusText;
    let fieldErrors: FieldError[] = [];
    try {
      const body = await response.json();
      errorName = body.error ?? errorName;
      detail = body.detail ?? detail;
      fieldErrors = body.errors ?? [];
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, errorName, detail, fieldErrors);
  }

  listDatasets(queryString: string): Promise<DatasetPage> {
    const suffix = queryString ? `?${queryString}` : "";
    return this.request<DatasetPage>(`/api/datasets${suffix}`);
  }

  detail(slug: string): Promise<PublicRecordView> {
    return this.request<PublicRecordView>(
      `/api/datasets/${encodeURIComponent(slug)}`);
  }

  recent(n: number): Promise<{ items: PublicRecordView[] }> {
    return this.request(`/api/datasets/recent?n=${n}`);
  }

  popular(n: number): Promise<{ items: PublicRecordView[] }> {
    return this.request(`/api/datasets/popular?n=${n}`);
  }

  markers(bbox?: BboxParam): Promise<{ markers: MarkerDto[] }> {
    const suffix = bbox
      ? `?bbox=${bbox.south},${bbox.west},${bbox.north},${bbox.east}`
      : "";
    return this.request(`/api/markers${suffix}`);
  }

  markersAt(lat: number, lon: number): Promise<MarkersAtResponse> {
    return this.request(`/api/markers/at?lat=${lat}&lon=${lon}`);
  }

  compare(ids: string[]): Promise<CompareTable> {
    return this.request(`/api/compare?ids=${ids.map(encodeURIComponent).join(",")}`);
  }

  submit(form: FormData): Promise<SubmissionAccepted> {
    return this.request("/api/datasets", { method: "POST", body: form });
  }

  adminList(token: string, status = "pending"): Promise<{ items: unknown[] }> {
    return this.request(`/api/admin/datasets?status=${status}`, {
      headers: { Authorization: `Bearer ${token}` },
    });
  }

  moderate(token: string, id: string, action: "approve" | "reject",
           reason?: string): Promise<{ id: string; status: string }> {
    return this.request(
      `/api/admin/datasets/${encodeURIComponent(id)}/${action}`, {
        method: "POST",
        headers: {
          Authorization: `Bearer ${token}`,
          "Content-Type": "application/json",
        },
        body: JSON.stringify(reason ? { reason } : {}),
      });
  }
}
