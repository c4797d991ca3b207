/**
 * Episode trace export. The server's close message already carries the
 * full trace as CSV text, byte identical to the file a headless run would
 * write, so the export is a pass-through: no reformatting, no re-derived
 * rows, nothing that could diverge from the server's record.
 */

import { CloseMessage } from "./protocol.js";

/** The exact CSV text the server produced for this episode. */
export function traceCsv(close: CloseMessage): string {
  return close.trace_csv;
}

export function traceFilename(close: CloseMessage): string {
  return `episode_${close.session_id}.csv`;
}

/** Offer the trace as a file download in the browser. */
export function downloadTrace(doc: Document, close: CloseMessage): void {
  const blob = new Blob([traceCsv(close)], { type: "text/csv" });
  const url = URL.createObjectURL(blob);
  const anchor = doc.createElement("a");
  anchor.href = url;
  anchor.download = traceFilename(close);
  doc.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
}
