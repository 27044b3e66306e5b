/** Single-page wiring: composer, plan inspector, code panes, scene
 * viewer, and parameter steering.
 *
 * The app owns no geometry. It submits requests, polls the task,
 * renders whatever the service returns, and steers parameters through
 * the stateless compile endpoint. The 3D canvas is optional: when no
 * WebGL context exists (tests, headless runs) the object graph is
 * still built and fully inspectable, only the pixels are skipped.
 */
import * as THREE from "three";

import { ApiError } from "./api.js";
import { explainFailure, type ExplainedFailure } from "./explain.js";
import { buildSceneGraph, setObjectVisible } from "./sceneGraph.js";
import { SteeringController, type Bindings } from "./steering.js";
import type {
  CompileRequest,
  CompileResponse,
  Diagnostic,
  Scene,
  Space,
  Subtask,
  TaskRecord,
  TaskSubmission,
  TraceStep,
} from "./types.js";

export interface RendererBackend {
  render(scene: THREE.Scene, camera: THREE.Camera): void;
  setSize(width: number, height: number): void;
  dispose(): void;
  domElement: HTMLCanvasElement;
}

export interface AppApi {
  submitTask(submission: TaskSubmission): Promise<TaskRecord>;
  task(id: string): Promise<TaskRecord>;
  compile(request: CompileRequest): Promise<CompileResponse>;
}

export interface AppOptions {
  api: AppApi;
  root: HTMLElement;
  pollIntervalMs?: number;
  debounceMs?: number;
  schedule?(fn: () => void, ms: number): unknown;
  cancel?(handle: unknown): void;
  /** Returns null when real rendering is unavailable. */
  createRenderer?(canvas: HTMLCanvasElement): RendererBackend | null;
}

type ScriptSection = "assignments" | "computation" | "visualization";

/** Classify one script line into its display section. */
export function classifyScriptLine(line: string): ScriptSection {
  const text = line.trim();
  if (text.startsWith(":")) return "visualization";
  if (/^\??\w+ = \d+(\.\d+)?;$/.test(text)) return "assignments";
  return "computation";
}

/** Group trace steps into cycles, each starting at an observation. */
export function groupTraceCycles(steps: TraceStep[]): TraceStep[][] {
  const cycles: TraceStep[][] = [];
  for (const step of steps) {
    const current = cycles[cycles.length - 1];
    if (step.phase === "observation" || !current) {
      cycles.push([step]);
    } else {
      current.push(step);
    }
  }
  return cycles;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) node.textContent = text;
  return node;
}

function defaultCreateRenderer(
  canvas: HTMLCanvasElement,
): RendererBackend | null {
  try {
    return new THREE.WebGLRenderer({ canvas, antialias: true });
  } catch {
    return null;
  }
}

function formatNumber(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toPrecision(6);
}

function diagnosticLine(diagnostic: Diagnostic): string {
  const where = diagnostic.span
    ? ` (line ${diagnostic.span.line}, col ${diagnostic.span.col})`
    : "";
  return `${diagnostic.severity} ${diagnostic.code}${where}: ${diagnostic.message}`;
}

/** Headless-friendly 3D panel: graph always present, pixels optional. */
export class SceneView {
  readonly scene = new THREE.Scene();
  readonly camera: THREE.PerspectiveCamera;
  private renderer: RendererBackend | null = null;
  private group: THREE.Group | null = null;

  constructor(
    private readonly container: HTMLElement,
    createRenderer: (canvas: HTMLCanvasElement) => RendererBackend | null,
  ) {
    this.camera = new THREE.PerspectiveCamera(50, 4 / 3, 0.01, 100);
    this.camera.position.set(1.4, 1.1, 1.4);
    this.camera.lookAt(0, 0.2, 0);
    this.scene.add(new THREE.AmbientLight(0xffffff, 0.7));
    const sun = new THREE.DirectionalLight(0xffffff, 1.2);
    sun.position.set(3, 5, 4);
    this.scene.add(sun);

    const canvas = el("canvas", { class: "scene-canvas" });
    this.renderer = createRenderer(canvas);
    if (this.renderer) {
      container.appendChild(this.renderer.domElement);
      this.renderer.setSize(640, 480);
    } else {
      container.appendChild(
        el("p", { class: "no-webgl" },
          "3D rendering is unavailable here; the scene graph below is still live."),
      );
    }
  }

  setScene(document: Scene): THREE.Group {
    if (this.group) this.scene.remove(this.group);
    this.group = buildSceneGraph(document);
    this.scene.add(this.group);
    this.draw();
    return this.group;
  }

  currentGroup(): THREE.Group | null {
    return this.group;
  }

  setVisible(id: string, visible: boolean): boolean {
    if (!this.group) return false;
    const changed = setObjectVisible(this.group, id, visible);
    if (changed) this.draw();
    return changed;
  }

  private draw(): void {
    this.renderer?.render(this.scene, this.camera);
  }

  dispose(): void {
    this.renderer?.dispose();
  }
}

export class App {
  private readonly api: AppApi;
  private readonly root: HTMLElement;
  private readonly pollIntervalMs: number;
  private readonly debounceMs: number;
  private readonly schedule: (fn: () => void, ms: number) => unknown;
  private readonly cancel: (handle: unknown) => void;
  private readonly createRenderer: (
    canvas: HTMLCanvasElement,
  ) => RendererBackend | null;

  private view: SceneView | null = null;
  private steering: SteeringController | null = null;
  private pollHandle: unknown = null;
  private disposed = false;

  /** The script of the last succeeded task; what steering recompiles. */
  private script: string | null = null;
  private space: Space = "cga3d";
  private baseline: CompileResponse | null = null;

  constructor(options: AppOptions) {
    this.api = options.api;
    this.root = options.root;
    this.pollIntervalMs = options.pollIntervalMs ?? 400;
    this.debounceMs = options.debounceMs ?? 250;
    this.schedule = options.schedule ?? ((fn, ms) => setTimeout(fn, ms));
    this.cancel = options.cancel ?? ((handle) => clearTimeout(handle as number));
    this.createRenderer = options.createRenderer ?? defaultCreateRenderer;
  }

  mount(): void {
    this.root.innerHTML = "";
    this.root.appendChild(this.buildComposer());

    const columns = el("div", { class: "columns" });
    const left = el("div", { class: "column" });
    left.appendChild(this.section("plan", "Plan"));
    left.appendChild(this.section("panes", "Script and code"));
    const right = el("div", { class: "column" });
    right.appendChild(this.section("viewer", "Scene"));
    right.appendChild(this.section("steering", "Parameters"));
    right.appendChild(this.section("outputs", "Outputs"));
    columns.append(left, right);
    this.root.appendChild(columns);

    const viewer = this.root.querySelector("#viewer")!;
    viewer.appendChild(el("div", { id: "scene-banner", class: "banner hidden" }));
    const container = el("div", { id: "scene-container" });
    viewer.appendChild(container);
    viewer.appendChild(el("div", { id: "object-toggles" }));
    this.view = new SceneView(container as HTMLElement, this.createRenderer);
  }

  dispose(): void {
    this.disposed = true;
    if (this.pollHandle !== null) this.cancel(this.pollHandle);
    this.steering?.dispose();
    this.view?.dispose();
  }

  /** Exposed for inspection: the current three.js object graph. */
  sceneGroup(): THREE.Group | null {
    return this.view?.currentGroup() ?? null;
  }

  private section(id: string, title: string): HTMLElement {
    const node = el("section", { id });
    node.appendChild(el("h2", {}, title));
    return node;
  }

  // ----- composer ---------------------------------------------------

  private buildComposer(): HTMLElement {
    const form = el("form", { id: "composer" });
    const description = el("textarea", {
      id: "description",
      placeholder: "Describe the construction...",
      rows: "3",
    });
    const formula = el("input", {
      id: "formula",
      placeholder: "Optional formula",
    });
    const space = el("select", { id: "space" });
    space.append(
      el("option", { value: "cga3d" }, "cga3d"),
      el("option", { value: "euclid3d" }, "euclid3d"),
    );
    const submit = el("button", { id: "submit", type: "submit" }, "Run");
    submit.disabled = true;
    const feedback = el("div", { id: "composer-feedback", class: "banner hidden" });
    const status = el("p", { id: "task-status" }, "");

    description.addEventListener("input", () => {
      submit.disabled = description.value.trim() === "";
    });
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      if (description.value.trim() === "") return;
      void this.submit({
        description: description.value,
        formula: formula.value,
        space: space.value as Space,
      });
    });

    form.append(description, formula, space, submit, feedback, status);
    return form;
  }

  private async submit(submission: TaskSubmission): Promise<void> {
    this.setBanner("composer-feedback", null);
    this.setStatus("submitting...");
    let record: TaskRecord;
    try {
      record = await this.api.submitTask(submission);
    } catch (error) {
      // The draft stays in the form; nothing is cleared on failure.
      this.setBanner("composer-feedback", explainFailure(error));
      this.setStatus("");
      return;
    }
    this.renderPlan(record);
    this.setStatus(`task ${record.id}: ${record.status}`);
    this.poll(record.id);
  }

  private poll(id: string): void {
    if (this.disposed) return;
    const tick = async () => {
      let record: TaskRecord;
      try {
        record = await this.api.task(id);
      } catch (error) {
        this.setBanner("composer-feedback", explainFailure(error));
        return;
      }
      this.setStatus(`task ${record.id}: ${record.status}`);
      if (record.status === "succeeded") {
        await this.showResult(record);
      } else if (record.status === "failed") {
        this.renderTaskFailure(record);
      } else {
        this.pollHandle = this.schedule(() => void tick(), this.pollIntervalMs);
      }
    };
    this.pollHandle = this.schedule(() => void tick(), this.pollIntervalMs);
  }

  private setStatus(text: string): void {
    const node = this.root.querySelector("#task-status");
    if (node) node.textContent = text;
  }

  private setBanner(id: string, failure: ExplainedFailure | null): void {
    const node = this.root.querySelector(`#${id}`);
    if (!(node instanceof HTMLElement)) return;
    if (!failure) {
      node.className = "banner hidden";
      node.innerHTML = "";
      return;
    }
    node.className = `banner ${failure.kind}`;
    node.innerHTML = "";
    node.appendChild(el("strong", {}, failure.title));
    node.appendChild(el("p", {}, failure.detail));
    for (const diagnostic of failure.diagnostics) {
      node.appendChild(el("p", { class: "diagnostic" }, diagnosticLine(diagnostic)));
    }
  }

  // ----- plan inspector ---------------------------------------------

  private renderPlan(record: TaskRecord): void {
    const section = this.root.querySelector("#plan");
    if (!section || !record.plan) return;
    section.querySelectorAll(".trace, .subtasks").forEach((n) => n.remove());

    const trace = el("div", { class: "trace" });
    for (const cycle of groupTraceCycles(record.plan.trace)) {
      const block = el("div", { class: "trace-cycle" });
      for (const step of cycle) {
        const line = el("p", { class: `trace-step ${step.phase}` });
        line.appendChild(el("strong", {}, step.phase));
        line.appendChild(document.createTextNode(` ${step.text}`));
        block.appendChild(line);
      }
      trace.appendChild(block);
    }
    if (record.plan.trace.length === 0) {
      trace.appendChild(el("p", { class: "placeholder" }, "No trace recorded."));
    }

    const subtasks = el("div", { class: "subtasks" });
    for (const subtask of record.plan.subtasks) {
      subtasks.appendChild(this.subtaskCard(subtask));
    }
    section.append(trace, subtasks);
  }

  private subtaskCard(subtask: Subtask): HTMLElement {
    const card = el("article", {
      class: "subtask",
      "data-task-id": subtask.task_id,
    });
    const heading = el("h3", {}, `${subtask.task_id} ${subtask.task_name}`);
    heading.appendChild(el("span", { class: "badge" }, subtask.category));
    card.appendChild(heading);
    card.appendChild(el("p", {}, subtask.task_description));
    card.addEventListener("click", () =>
      this.highlightScript(subtask.variable_names),
    );
    return card;
  }

  private highlightScript(names: string[]): void {
    const wanted = new Set(names);
    this.root.querySelectorAll("#script-pane .line").forEach((node) => {
      const tokens = (node.textContent ?? "").split(/\W+/);
      const hit = tokens.some((token) => wanted.has(token));
      node.classList.toggle("highlight", hit);
    });
  }

  // ----- result: panes, scene, steering ------------------------------

  private async showResult(record: TaskRecord): Promise<void> {
    this.renderPlan(record);
    this.renderScript(record.script ?? "");
    this.renderCode(record.code ?? "");
    if (record.scene) this.applyScene(record.scene);
    if (record.outputs) this.renderOutputs(record.outputs);
    this.script = record.script ?? null;
    this.space = (record.request.space as Space) ?? "cga3d";
    if (this.script) await this.startSteering();
  }

  private renderTaskFailure(record: TaskRecord): void {
    const error = record.error;
    const failure: ExplainedFailure = {
      kind: "unknown",
      title: error?.subtask
        ? `Task failed at subtask ${error.subtask}`
        : "Task failed",
      detail: error?.message ?? "no detail recorded",
      diagnostics: error?.diagnostics ?? [],
    };
    this.setBanner("composer-feedback", failure);
  }

  private renderScript(script: string): void {
    const section = this.root.querySelector("#panes");
    if (!section) return;
    section.querySelectorAll(".pane").forEach((n) => n.remove());

    const pane = el("div", { class: "pane" });
    pane.appendChild(this.copyButton(script));
    const pre = el("pre", { id: "script-pane" });
    let currentSection: ScriptSection | null = null;
    for (const line of script.split("\n")) {
      if (line.trim() === "") continue;
      const kind = classifyScriptLine(line);
      if (kind !== currentSection) {
        currentSection = kind;
        pre.appendChild(el("div", { class: "section-label" }, kind));
      }
      pre.appendChild(el("div", { class: `line ${kind}` }, line));
    }
    pane.appendChild(pre);
    section.appendChild(pane);
  }

  private renderCode(code: string): void {
    const section = this.root.querySelector("#panes");
    if (!section) return;
    section.querySelector(".code-pane")?.remove();
    const pane = el("div", { class: "pane code-pane" });
    pane.appendChild(this.copyButton(code));
    pane.appendChild(el("pre", { id: "code-pane" }, code));
    section.appendChild(pane);
  }

  private copyButton(text: string): HTMLElement {
    const button = el("button", { class: "copy", type: "button" }, "Copy");
    button.addEventListener("click", () => {
      void navigator.clipboard?.writeText(text);
    });
    return button;
  }

  private renderOutputs(
    outputs: Record<string, Record<string, number>>,
  ): void {
    const section = this.root.querySelector("#outputs");
    if (!section) return;
    section.querySelector("dl")?.remove();
    const list = el("dl", { id: "outputs-list" });
    for (const [name, terms] of Object.entries(outputs)) {
      list.appendChild(el("dt", {}, name));
      const rendered = Object.entries(terms)
        .map(([blade, coeff]) => `${blade}: ${formatNumber(coeff)}`)
        .join(",  ");
      list.appendChild(el("dd", {}, rendered || "0"));
    }
    section.appendChild(list);
  }

  private applyScene(scene: Scene): void {
    if (!this.view) return;
    this.view.setScene(scene);
    const toggles = this.root.querySelector("#object-toggles");
    if (!toggles) return;
    toggles.innerHTML = "";
    for (const object of scene.objects) {
      const label = el("label", { class: "toggle" });
      const box = el("input", { type: "checkbox", "data-id": object.id });
      box.checked = true;
      box.addEventListener("change", () => {
        this.view?.setVisible(object.id, box.checked);
      });
      label.append(box, document.createTextNode(` ${object.label} (${object.kind})`));
      toggles.appendChild(label);
    }
  }

  // ----- steering ----------------------------------------------------

  private async startSteering(): Promise<void> {
    this.steering?.dispose();
    if (!this.script) return;
    const script = this.script;
    let baseline: CompileResponse;
    try {
      baseline = await this.api.compile({ script, space: this.space });
    } catch (error) {
      this.setBanner("scene-banner", explainFailure(error));
      return;
    }
    this.baseline = baseline;

    this.steering = new SteeringController({
      debounceMs: this.debounceMs,
      schedule: this.schedule,
      cancel: this.cancel,
      compile: (bindings: Bindings) =>
        this.api.compile({ script, space: this.space, bindings }),
      events: {
        onUpdate: (response) => {
          this.setBanner("scene-banner", null);
          this.applyScene(response.scene);
          this.renderCode(response.code);
          this.renderOutputs(response.outputs);
        },
        onFailure: (failure) => {
          // Last good scene stays on screen; the state is explained
          // beside it rather than replacing it.
          this.setBanner("scene-banner", failure);
        },
      },
    });
    this.renderSteeringPanel(baseline.inputs);
  }

  private renderSteeringPanel(inputs: Record<string, number | null>): void {
    const section = this.root.querySelector("#steering");
    if (!section) return;
    section.querySelectorAll(".controls, .reset").forEach((n) => n.remove());

    const controls = el("div", { class: "controls" });
    for (const [name, value] of Object.entries(inputs)) {
      const row = el("label", { class: "control" });
      row.appendChild(el("span", {}, name));
      const field = el("input", {
        type: "number",
        step: "0.05",
        "data-input": name,
        value: value === null ? "" : String(value),
      });
      field.addEventListener("input", () => {
        const parsed = Number(field.value);
        if (Number.isFinite(parsed)) this.steering?.setInput(name, parsed);
      });
      row.appendChild(field);
      controls.appendChild(row);
    }
    section.appendChild(controls);

    const reset = el("button", { class: "reset", type: "button" }, "Reset");
    reset.addEventListener("click", () => {
      this.steering?.reset();
      const baseline = this.baseline;
      if (!baseline) return;
      this.root
        .querySelectorAll<HTMLInputElement>("#steering input[data-input]")
        .forEach((field) => {
          const name = field.dataset["input"] ?? "";
          const value = baseline.inputs[name];
          field.value = value === null || value === undefined ? "" : String(value);
        });
    });
    section.appendChild(reset);
  }
}

export function createApp(options: AppOptions): App {
  const app = new App(options);
  app.mount();
  return app;
}

export { ApiError };
