/** Wire types, mirroring the server's public JSON bodies. */

export interface PublicRecordView {
  id: string;
  slug: string;
  name: string;
  published_on: string;
  location: string;
  sensors: string[];
  tasks: string[];
  size_bytes: number;
  size: string;
  download_url: string;
  view_count: number;
  teaser_url: string;
  description: string;
}

export interface DatasetPage {
  total: number;
  page: number;
  per_page: number;
  items: PublicRecordView[];
}

export interface MarkerDto {
  record_id: string;
  lat: number;
  lon: number;
  label: string;
}

export interface MarkersAtResponse {
  ids: string[];
  items: PublicRecordView[];
}

export interface CompareRow {
  label: string;
  values: string[];
}

export interface CompareTable {
  columns: string[];
  column_names: string[];
  rows: CompareRow[];
}

export interface FieldError {
  field: string;
  code: string;
  message: string;
}

export interface SubmissionAccepted {
  id: string;
  status: string;
}
