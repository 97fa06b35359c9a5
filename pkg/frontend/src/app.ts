import { ApiClient, ApiError } from "./api.js";
import type { Diagnostic, MachineDef, StepDirection, StepView } from "./types.js";
import { renderBanner, renderStatus, renderTapes } from "./view.js";

const BOUNDARY_CUE_MS = 300;

/** The stepper page: machine picker, word/head inputs, run/clear, arrow
 * buttons, tape strips, and the status footer.  All rendering below the
 * controls is a pure function of the last StepView; the app only adds
 * scroll-offset preservation on top. */
export class App {
  readonly root: HTMLElement;
  private doc: Document;
  private api: ApiClient;
  private machines: MachineDef[] = [];
  private view: StepView | null = null;
  private queue: Promise<unknown> = Promise.resolve();

  private picker!: HTMLSelectElement;
  private alphabet!: HTMLElement;
  private wordInput!: HTMLInputElement;
  private headInput!: HTMLInputElement;
  private runButton!: HTMLButtonElement;
  private clearButton!: HTMLButtonElement;
  private backButton!: HTMLButtonElement;
  private forwardButton!: HTMLButtonElement;
  private errors!: HTMLElement;
  private bannerSlot!: HTMLElement;
  private tapesSlot!: HTMLElement;
  private statusSlot!: HTMLElement;

  constructor(root: HTMLElement, api: ApiClient) {
    this.root = root;
    this.doc = root.ownerDocument;
    this.api = api;
    this.buildSkeleton();
  }

  /** Load the bundled machines and enable the controls. */
  async init(): Promise<void> {
    this.machines = await this.api.examples();
    this.picker.innerHTML = "";
    this.machines.forEach((machine, i) => {
      const option = this.doc.createElement("option");
      option.value = String(i);
      option.textContent = machine.name;
      this.picker.appendChild(option);
    });
    this.showAlphabet();
    this.updateControls();
  }

  get currentView(): StepView | null {
    return this.view;
  }

  selectedMachine(): MachineDef {
    const machine = this.machines[Number(this.picker.value || 0)];
    if (!machine) throw new Error("no machine selected");
    return machine;
  }

  private buildSkeleton(): void {
    const doc = this.doc;
    this.root.classList.add("stepper");

    const controls = doc.createElement("div");
    controls.className = "controls";

    this.picker = doc.createElement("select");
    this.picker.className = "machine-picker";
    this.picker.addEventListener("change", () => this.showAlphabet());
    controls.appendChild(this.picker);

    this.alphabet = doc.createElement("span");
    this.alphabet.className = "alphabet";
    controls.appendChild(this.alphabet);

    this.wordInput = doc.createElement("input");
    this.wordInput.className = "word-input";
    this.wordInput.placeholder = "word, e.g. @ _ a b c";
    controls.appendChild(this.wordInput);

    this.headInput = doc.createElement("input");
    this.headInput.className = "head-input";
    this.headInput.type = "number";
    this.headInput.min = "0";
    this.headInput.value = "1";
    controls.appendChild(this.headInput);

    this.runButton = this.button("run", "run", () => this.run());
    controls.appendChild(this.runButton);
    this.clearButton = this.button("clear", "clear", () => this.clear());
    controls.appendChild(this.clearButton);
    this.backButton = this.button("back", "←", () => this.step("backward"));
    this.backButton.setAttribute("aria-label", "step backward");
    controls.appendChild(this.backButton);
    this.forwardButton = this.button("forward", "→", () => this.step("forward"));
    this.forwardButton.setAttribute("aria-label", "step forward");
    controls.appendChild(this.forwardButton);

    this.errors = doc.createElement("ul");
    this.errors.className = "errors";
    this.bannerSlot = doc.createElement("div");
    this.bannerSlot.className = "banner-slot";
    this.tapesSlot = doc.createElement("div");
    this.tapesSlot.className = "tapes-slot";
    this.statusSlot = doc.createElement("div");
    this.statusSlot.className = "status-slot";

    this.root.append(controls, this.errors, this.bannerSlot, this.tapesSlot, this.statusSlot);
    this.updateControls();
  }

  private button(cls: string, label: string, onClick: () => void): HTMLButtonElement {
    const b = this.doc.createElement("button");
    b.className = cls;
    b.textContent = label;
    b.addEventListener("click", onClick);
    return b;
  }

  private showAlphabet(): void {
    const machine = this.machines[Number(this.picker.value || 0)];
    this.alphabet.textContent = machine ? `alphabet: ${machine.alphabet.join(" ")}` : "";
  }

  /** One API conversation at a time; later clicks wait for earlier ones. */
  private enqueue<T>(op: () => Promise<T>): Promise<T> {
    const next = this.queue.then(op, op);
    this.queue = next.catch(() => undefined);
    return next;
  }

  run(): Promise<void> {
    return this.enqueue(async () => {
      const word = this.wordInput.value.trim().split(/\s+/).filter((t) => t.length > 0);
      const head = Number(this.headInput.value);
      try {
        const summary = await this.api.createSession(this.selectedMachine(), word, head);
        this.view = await this.api.view(summary.id);
        this.showErrors([]);
      } catch (err) {
        this.handleError(err);
        return;
      }
      this.render();
    });
  }

  step(direction: StepDirection): Promise<void> {
    return this.enqueue(async () => {
      if (!this.view) return;
      const blocked =
        (direction === "backward" && this.view.atStart) ||
        (direction === "forward" && this.view.atEnd);
      if (blocked) {
        this.boundaryCue(direction === "backward" ? this.backButton : this.forwardButton);
        return;
      }
      try {
        this.view = await this.api.step(this.view.id, direction);
      } catch (err) {
        this.handleError(err);
        return;
      }
      this.render();
    });
  }

  clear(): Promise<void> {
    return this.enqueue(async () => {
      const old = this.view;
      this.view = null;
      this.wordInput.value = "";
      this.showErrors([]);
      this.render();
      if (old) {
        try {
          await this.api.remove(old.id);
        } catch {
          // the session may have expired already; nothing to clean up
        }
      }
    });
  }

  private boundaryCue(button: HTMLButtonElement): void {
    button.classList.add("bump");
    setTimeout(() => button.classList.remove("bump"), BOUNDARY_CUE_MS);
  }

  private handleError(err: unknown): void {
    if (err instanceof ApiError && err.diagnostics.length > 0) {
      this.showErrors(err.diagnostics);
    } else if (err instanceof ApiError) {
      this.showErrors([{ code: `HTTP ${err.status}`, message: err.message, locus: null }]);
    } else {
      this.showErrors([{ code: "error", message: String(err), locus: null }]);
    }
  }

  private showErrors(diagnostics: Diagnostic[]): void {
    this.errors.innerHTML = "";
    for (const diag of diagnostics) {
      const item = this.doc.createElement("li");
      item.textContent = diag.locus
        ? `${diag.code}: ${diag.message} (${diag.locus})`
        : `${diag.code}: ${diag.message}`;
      this.errors.appendChild(item);
    }
  }

  /** Swap in the rendering of the current view, carrying scroll offsets
   * across so stepping does not yank the tapes back to the origin. */
  private render(): void {
    const horizontal = new Map<string, number>();
    this.tapesSlot.querySelectorAll<HTMLElement>(".tape-strip").forEach((strip) => {
      const scroll = strip.querySelector<HTMLElement>(".tape-scroll");
      if (scroll) horizontal.set(strip.dataset.tape ?? "", scroll.scrollLeft);
    });
    const region = this.tapesSlot.querySelector<HTMLElement>(".tapes");
    const vertical = region ? region.scrollTop : 0;

    this.bannerSlot.innerHTML = "";
    this.tapesSlot.innerHTML = "";
    this.statusSlot.innerHTML = "";
    if (this.view) {
      this.bannerSlot.appendChild(renderBanner(this.doc, this.view));
      const tapes = renderTapes(this.doc, this.view);
      tapes.scrollTop = vertical;
      tapes.querySelectorAll<HTMLElement>(".tape-strip").forEach((strip) => {
        const offset = horizontal.get(strip.dataset.tape ?? "");
        const scroll = strip.querySelector<HTMLElement>(".tape-scroll");
        if (scroll && offset !== undefined) scroll.scrollLeft = offset;
      });
      this.tapesSlot.appendChild(tapes);
      this.statusSlot.appendChild(renderStatus(this.doc, this.view));
    }
    this.updateControls();
  }

  private updateControls(): void {
    const v = this.view;
    this.backButton.classList.toggle("at-boundary", !v || v.atStart);
    this.forwardButton.classList.toggle("at-boundary", !v || v.atEnd);
  }
}

export async function mountApp(root: HTMLElement, api: ApiClient): Promise<App> {
  const app = new App(root, api);
  await app.init();
  return app;
}
