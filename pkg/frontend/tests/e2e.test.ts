import { type ChildProcess, spawn } from "node:child_process";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;
const REPO = join(dirname(fileURLToPath(import.meta.url)), "..", "..");

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 80; attempt++) {
    try {
      const res = await fetch(`${BASE}/api/machines/examples`);
      if (res.ok) return;
    } catch {
      // not listening yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "fsmlab.cli", "serve", "--port", String(PORT)], {
    cwd: REPO,
    stdio: "ignore",
  });
  await waitForServer();
});

afterAll(() => {
  server.kill();
});

function headPositions(root: HTMLElement): number[] {
  return [...root.querySelectorAll<HTMLElement>(".tape-strip")].map((strip) => {
    const cells = [...strip.querySelectorAll(".cell")];
    return cells.findIndex((cell) => cell.classList.contains("head"));
  });
}

async function runWord(app: App, root: HTMLElement, word: string, head: string) {
  root.querySelector<HTMLInputElement>(".word-input")!.value = word;
  root.querySelector<HTMLInputElement>(".head-input")!.value = head;
  await app.run();
}

describe("stepper against the live service", () => {
  let root: HTMLElement;
  let app: App;

  beforeEach(async () => {
    document.body.innerHTML = '<div id="app"></div>';
    root = document.getElementById("app")!;
    app = new App(root, new ApiClient(BASE));
    await app.init();
    root.querySelector<HTMLSelectElement>(".machine-picker")!.value = "0";
  });

  it("serves the built page shell", async () => {
    const res = await fetch(`${BASE}/`);
    expect(res.ok).toBe(true);
    expect(await res.text()).toContain('<div id="app">');
  });

  it("accepts the six-symbol word and survives a full round trip", async () => {
    await runWord(app, root, "@ _ a c c b a b", "1");
    expect(root.querySelector(".banner")!.textContent).toBe("Word accepted.");
    expect(root.querySelector(".step-counter")!.textContent).toBe("step 0 of 17");

    const atStart = root.querySelector(".tapes-slot")!.innerHTML;
    await app.step("forward");
    expect(root.querySelector(".step-counter")!.textContent).toBe("step 1 of 17");
    await app.step("backward");
    expect(root.querySelector(".tapes-slot")!.innerHTML).toBe(atStart);

    for (let i = 0; i < 17; i++) await app.step("forward");
    expect(root.querySelector(".step-counter")!.textContent).toBe("step 17 of 17");
    expect(root.querySelector(".state-box.current")!.textContent).toBe("Y");
  });

  it("walks to the copy-third-c moment and back", async () => {
    await runWord(app, root, "@ _ a a a b c c b b c", "1");
    expect(root.querySelector(".banner")!.textContent).toBe("Word accepted.");

    for (let i = 0; i < 12; i++) await app.step("forward");
    expect(root.querySelector(".step-counter")!.textContent).toBe("step 12 of 24");
    expect(root.querySelector(".prev")!.textContent).toBe("C");
    expect(root.querySelector(".state-box.current")!.textContent).toBe("F");
    expect(headPositions(root)).toEqual([7, 4, 2, 2]);
    expect(root.querySelector(".last-rule")!.textContent).toBe(
      "((C (c _ _ _)) (F (c _ _ c)))",
    );

    const moment = root.querySelector(".tapes-slot")!.innerHTML;
    const status = root.querySelector(".status-slot")!.innerHTML;
    await app.step("forward");
    await app.step("backward");
    expect(root.querySelector(".tapes-slot")!.innerHTML).toBe(moment);
    expect(root.querySelector(".status-slot")!.innerHTML).toBe(status);
  });

  it("reports a rejected word in the banner", async () => {
    await runWord(app, root, "@ _ a b", "1");
    expect(root.querySelector(".banner")!.textContent).toBe("Word rejected.");
    expect(root.querySelector(".banner")!.classList.contains("reject")).toBe(true);
  });

  it("surfaces an out-of-range head as an inline message", async () => {
    await runWord(app, root, "@ _ a b", "9");
    const items = [...root.querySelectorAll(".errors li")].map((n) => n.textContent);
    expect(items.length).toBeGreaterThan(0);
    expect(items[0]).toContain("BadInitial");
  });
});
