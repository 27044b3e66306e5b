/** Debounced, latest-wins parameter steering.
 *
 * Every slider tick lands here; the backend only hears from us once
 * per settled value. One controller covers all inputs because a
 * compile request always carries the complete override map, so two
 * concurrent requests could only race each other. Guarantees:
 *
 *  - exactly one compile per settled input (the debounce timer resets
 *    on every change and fires once),
 *  - at most one request in flight; a value settling mid-flight queues
 *    exactly one follow-up with the newest overrides,
 *  - stale responses are dropped (latest-wins), so the scene never
 *    goes backwards,
 *  - steering is stateless on the backend: it never touches stored
 *    tasks, only the compile endpoint.
 */
import { explainFailure, type ExplainedFailure } from "./explain.js";
import type { CompileResponse } from "./types.js";

export type Bindings = Record<string, number>;

export interface SteeringEvents {
  onUpdate(response: CompileResponse, bindings: Bindings): void;
  onFailure(failure: ExplainedFailure, bindings: Bindings): void;
}

export interface SteeringOptions {
  compile(bindings: Bindings): Promise<CompileResponse>;
  events: SteeringEvents;
  /** Quiet time after the last change before a compile fires. */
  debounceMs?: number;
  /** Timer hooks, injectable for tests. */
  schedule?(fn: () => void, ms: number): unknown;
  cancel?(handle: unknown): void;
}

export class SteeringController {
  private readonly compile: SteeringOptions["compile"];
  private readonly events: SteeringEvents;
  private readonly debounceMs: number;
  private readonly schedule: (fn: () => void, ms: number) => unknown;
  private readonly cancel: (handle: unknown) => void;

  private overrides = new Map<string, number>();
  private timer: unknown = null;
  private inFlight = false;
  private queued = false;
  private issued = 0;
  private disposed = false;

  constructor(options: SteeringOptions) {
    this.compile = options.compile;
    this.events = options.events;
    this.debounceMs = options.debounceMs ?? 250;
    this.schedule =
      options.schedule ?? ((fn, ms) => setTimeout(fn, ms));
    this.cancel =
      options.cancel ?? ((handle) => clearTimeout(handle as number));
  }

  /** Current override map as a plain object (what the next compile sends). */
  bindings(): Bindings {
    return Object.fromEntries(this.overrides);
  }

  setInput(name: string, value: number): void {
    this.overrides.set(name, value);
    this.bump();
  }

  clearInput(name: string): void {
    if (this.overrides.delete(name)) this.bump();
  }

  /** Drop all overrides and recompile once, restoring the original scene. */
  reset(): void {
    this.overrides.clear();
    this.bump();
  }

  /** Fire the pending compile now instead of waiting out the debounce. */
  flush(): void {
    if (this.timer !== null) {
      this.cancel(this.timer);
      this.timer = null;
      this.fire();
    }
  }

  dispose(): void {
    this.disposed = true;
    if (this.timer !== null) {
      this.cancel(this.timer);
      this.timer = null;
    }
  }

  private bump(): void {
    if (this.disposed) return;
    if (this.timer !== null) this.cancel(this.timer);
    this.timer = this.schedule(() => {
      this.timer = null;
      this.fire();
    }, this.debounceMs);
  }

  private fire(): void {
    if (this.disposed) return;
    if (this.inFlight) {
      this.queued = true;
      return;
    }
    const bindings = this.bindings();
    const ticket = ++this.issued;
    this.inFlight = true;
    this.compile(bindings).then(
      (response) => this.settle(ticket, () =>
        this.events.onUpdate(response, bindings)),
      (error) => this.settle(ticket, () =>
        this.events.onFailure(explainFailure(error), bindings)),
    );
  }

  private settle(ticket: number, deliver: () => void): void {
    this.inFlight = false;
    if (this.disposed) return;
    if (this.queued) {
      this.queued = false;
      // A newer value settled while this request flew; its compile
      // supersedes this result.
      this.fire();
      return;
    }
    if (ticket === this.issued) deliver();
  }
}
