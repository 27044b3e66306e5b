/** Shared test plumbing: a hand-cranked clock and a microtask drain. */

interface ScheduledTask {
  id: number;
  at: number;
  fn: () => void;
}

/** Deterministic replacement for setTimeout/clearTimeout. */
export class ManualClock {
  private now = 0;
  private nextId = 1;
  private tasks: ScheduledTask[] = [];

  schedule = (fn: () => void, ms: number): unknown => {
    const task = { id: this.nextId++, at: this.now + ms, fn };
    this.tasks.push(task);
    return task.id;
  };

  cancel = (handle: unknown): void => {
    this.tasks = this.tasks.filter((task) => task.id !== handle);
  };

  /** Advance time, running every task that comes due (in due order). */
  advance(ms: number): void {
    const target = this.now + ms;
    for (;;) {
      const due = this.tasks
        .filter((task) => task.at <= target)
        .sort((a, b) => a.at - b.at || a.id - b.id)[0];
      if (!due) break;
      this.now = due.at;
      this.tasks = this.tasks.filter((task) => task.id !== due.id);
      due.fn();
    }
    this.now = target;
  }

  pending(): number {
    return this.tasks.length;
  }
}

/** Let queued promise reactions run. */
export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

/** Deferred promise with exposed resolve/reject. */
export function deferred<T>(): {
  promise: Promise<T>;
  resolve: (value: T) => void;
  reject: (reason?: unknown) => void;
} {
  let resolve!: (value: T) => void;
  let reject!: (reason?: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

/** Build a JSON Response the way the service would send it. */
export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}
