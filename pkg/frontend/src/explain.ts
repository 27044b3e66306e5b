/** Turns API failures into states a learner can act on.
 *
 * The important one is non-intersection: when steering pushes a sphere
 * radius below the point where the spheres still share points, the
 * backend reports an imaginary point pair (compile code E208 or run
 * code sqrt_negative). That is not a malfunction, it is geometry, so
 * the UI presents it as a first-class explained state instead of an
 * error toast. All numbers in the explanation come from the backend
 * message; nothing is recomputed here.
 */
import { ApiError } from "./api.js";
import type { Diagnostic } from "./types.js";

export type FailureKind =
  | "non-intersection"
  | "missing-input"
  | "invalid-script"
  | "unplannable"
  | "service-down"
  | "unknown";

export interface ExplainedFailure {
  kind: FailureKind;
  title: string;
  detail: string;
  diagnostics: Diagnostic[];
}

const NON_INTERSECTION_CODES = new Set(["sqrt_negative", "E208"]);
const SCRIPT_CODE = /^E[0-2]\d\d$/;

export function explainFailure(error: unknown): ExplainedFailure {
  if (error instanceof ApiError) {
    const diagnostics = error.diagnostics;
    const message = error.detail.message ?? error.message;

    if (error.status >= 500) {
      return {
        kind: "service-down",
        title: "Service unavailable",
        detail: message,
        diagnostics,
      };
    }
    if (diagnostics.some((d) => NON_INTERSECTION_CODES.has(d.code))) {
      return {
        kind: "non-intersection",
        title: "No real intersection",
        detail:
          "With these values the spheres no longer share a point, so the " +
          "intersection the script asks for has no real solution. The " +
          `solver reported: ${message}. Grow a radius (or move a center ` +
          "closer) to bring the intersection back.",
        diagnostics,
      };
    }
    if (diagnostics.some((d) => d.code === "E401")) {
      return {
        kind: "unplannable",
        title: "Request not recognized",
        detail: message,
        diagnostics,
      };
    }
    if (message.startsWith("missing input")) {
      return {
        kind: "missing-input",
        title: "Input needs a value",
        detail: message,
        diagnostics,
      };
    }
    if (diagnostics.some((d) => SCRIPT_CODE.test(d.code))) {
      return {
        kind: "invalid-script",
        title: "Script rejected",
        detail: message,
        diagnostics,
      };
    }
    return { kind: "unknown", title: "Request failed", detail: message, diagnostics };
  }

  if (error instanceof TypeError) {
    return {
      kind: "service-down",
      title: "Cannot reach the service",
      detail: "The request never made it to the backend. Check that the " +
        "service is running, then retry. Nothing you typed was lost.",
      diagnostics: [],
    };
  }

  const detail = error instanceof Error ? error.message : String(error);
  return { kind: "unknown", title: "Request failed", detail, diagnostics: [] };
}
