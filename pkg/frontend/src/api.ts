/** Typed client for the gacraft HTTP service.
 *
 * The fetch implementation is injectable so tests can run fully
 * offline against canned responses. Non-2xx answers become ApiError
 * with the parsed detail attached; transport failures are rethrown
 * untouched so callers can tell "service said no" from "service gone".
 */
import type {
  CodeResponse,
  CompileRequest,
  CompileResponse,
  Diagnostic,
  ErrorDetail,
  HealthResponse,
  Scene,
  TaskRecord,
  TaskSubmission,
  TaskSummary,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export interface ApiOptions {
  /** Origin of the service, e.g. "http://localhost:8000". Empty = same origin. */
  baseUrl?: string;
  fetchFn?: FetchLike;
}

export class ApiError extends Error {
  readonly status: number;
  readonly detail: ErrorDetail;

  constructor(status: number, detail: ErrorDetail) {
    super(detail.message ?? `request failed with status ${status}`);
    this.name = "ApiError";
    this.status = status;
    this.detail = detail;
  }

  get diagnostics(): Diagnostic[] {
    return this.detail.diagnostics ?? [];
  }
}

function asDetail(body: unknown): ErrorDetail {
  if (body && typeof body === "object" && "detail" in body) {
    const detail = (body as { detail: unknown }).detail;
    if (typeof detail === "string") return { message: detail };
    if (detail && typeof detail === "object") return detail as ErrorDetail;
    // FastAPI request-validation errors arrive as an array of issues.
    if (Array.isArray(detail)) {
      return { message: "request validation failed" };
    }
  }
  return { message: "request failed" };
}

export class ApiClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(options: ApiOptions = {}) {
    this.baseUrl = (options.baseUrl ?? "").replace(/\/$/, "");
    const fallback: FetchLike = (input, init) => fetch(input, init);
    this.fetchFn = options.fetchFn ?? fallback;
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      throw new ApiError(response.status, asDetail(body));
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  health(): Promise<HealthResponse> {
    return this.request("/api/health");
  }

  registry(): Promise<unknown> {
    return this.request("/api/registry");
  }

  submitTask(submission: TaskSubmission): Promise<TaskRecord> {
    return this.post("/api/tasks", submission);
  }

  listTasks(): Promise<TaskSummary[]> {
    return this.request("/api/tasks");
  }

  task(id: string): Promise<TaskRecord> {
    return this.request(`/api/tasks/${encodeURIComponent(id)}`);
  }

  taskScene(id: string): Promise<Scene> {
    return this.request(`/api/tasks/${encodeURIComponent(id)}/scene`);
  }

  taskCode(id: string): Promise<CodeResponse> {
    return this.request(`/api/tasks/${encodeURIComponent(id)}/code`);
  }

  compile(request: CompileRequest): Promise<CompileResponse> {
    return this.post("/api/compile", request);
  }
}
