/** Cross-view state: the compare tray and the moderator token.
 * Both live in memory only; a reload clears them. */

import type { PublicRecordView } from "./types.js";

const traySelection = new Map<string, string>(); // id -> name
const trayListeners = new Set<() => void>();

export function trayToggle(record: PublicRecordView): void {
  if (traySelection.has(record.id)) {
    traySelection.delete(record.id);
  } else {
    traySelection.set(record.id, record.name);
  }
  for (const listener of trayListeners) listener();
}

export function trayHas(id: string): boolean {
  return traySelection.has(id);
}

export function trayEntries(): Array<[string, string]> {
  return [...traySelection.entries()];
}

export function trayClear(): void {
  traySelection.clear();
  for (const listener of trayListeners) listener();
}

export function onTrayChange(listener: () => void): () => void {
  trayListeners.add(listener);
  return () => trayListeners.delete(listener);
}

let moderatorToken: string | null = null;

export function setModeratorToken(token: string | null): void {
  moderatorToken = token && token.trim() ? token.trim() : null;
}

export function getModeratorToken(): string | null {
  return moderatorToken;
}
