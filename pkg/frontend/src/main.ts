/** Browser entry point.
 *
 * The service origin comes from, in order: a global set before this
 * script runs, an ?api= query parameter, or localhost:8000 (the
 * default `gacraft serve` address).
 */
import { ApiClient } from "./api.js";
import { createApp } from "./app.js";

declare global {
  interface Window {
    GACRAFT_API_BASE?: string;
  }
}

function apiBase(): string {
  if (window.GACRAFT_API_BASE !== undefined) return window.GACRAFT_API_BASE;
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  if (fromQuery !== null) return fromQuery;
  return "http://localhost:8000";
}

const root = document.getElementById("app");
if (root) {
  createApp({ api: new ApiClient({ baseUrl: apiBase() }), root });
}
