/** Wire types for the gacraft HTTP API.
 *
 * These mirror the service's JSON shapes one to one (see the backend's
 * docs/formats.md). Nothing in the UI computes geometry: every number
 * shown on screen arrives through one of these types.
 */

export type Space = "cga3d" | "euclid3d";

export interface Color {
  r: number;
  g: number;
  b: number;
}

export type SceneObjectKind =
  | "point"
  | "sphere"
  | "plane"
  | "line"
  | "circle"
  | "unknown";

export interface SceneObject {
  id: string;
  kind: SceneObjectKind;
  color: Color;
  label: string;
  params: Record<string, number>;
}

export interface Scene {
  version: number;
  space: Space;
  objects: SceneObject[];
}

export interface Span {
  line: number;
  col: number;
  length: number;
}

export interface Diagnostic {
  severity: "error" | "warning";
  code: string;
  message: string;
  span?: Span | null;
}

export type TracePhase = "observation" | "thoughts" | "action";

export interface TraceStep {
  seq: number;
  phase: TracePhase;
  text: string;
}

export interface Subtask {
  task_id: string;
  task_name: string;
  task_description: string;
  variable_names: string[];
  category: string;
  code_language: string;
  ga_type: string;
  specific_values: Record<string, number>;
  visualization: [string, string][];
  depends_on: string[];
}

export interface Plan {
  description: string;
  formula: string;
  space: string;
  language: string;
  subtasks: Subtask[];
  trace: TraceStep[];
}

export type TaskStatus = "queued" | "running" | "succeeded" | "failed";

export interface TaskError {
  message: string;
  subtask?: string | null;
  retries_used?: number;
  diagnostics?: Diagnostic[];
}

export interface TaskSubmission {
  description: string;
  formula?: string;
  space?: Space;
  language?: string;
}

export interface TaskRecord {
  id: string;
  status: TaskStatus;
  created: number;
  request: Required<TaskSubmission>;
  plan: Plan | null;
  error: TaskError | null;
  script?: string | null;
  code?: string | null;
  scene?: Scene | null;
  outputs?: Record<string, Record<string, number>> | null;
  warnings?: Diagnostic[] | null;
  trace?: TraceStep[] | null;
}

export interface TaskSummary {
  id: string;
  status: TaskStatus;
  description: string;
  created: number;
}

export interface CompileRequest {
  script: string;
  space?: Space;
  bindings?: Record<string, number>;
}

export interface CompileResponse {
  code: string;
  scene: Scene;
  /** Program inputs with their defaults; null means the input must be bound. */
  inputs: Record<string, number | null>;
  outputs: Record<string, Record<string, number>>;
  warnings: Diagnostic[];
}

export interface HealthResponse {
  status: string;
  version: string;
}

export interface CodeResponse {
  language: string;
  code: string;
}

/** Body of a non-2xx response: FastAPI nests everything under `detail`. */
export interface ErrorDetail {
  message?: string;
  diagnostics?: Diagnostic[];
  error?: TaskError | null;
}
