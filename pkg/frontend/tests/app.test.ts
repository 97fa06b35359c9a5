import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import type { MachineDef, StepView } from "../src/types.js";

const MACHINE: MachineDef = {
  name: "EQABC",
  tapes: 2,
  states: ["S", "C", "Y"],
  alphabet: ["a", "b", "c"],
  start: "S",
  finals: ["Y"],
  accept: "Y",
  rules: [],
};

function viewAt(step: number): StepView {
  const states = ["S", "C", "Y"];
  return {
    id: "s1",
    step,
    steps: 2,
    atStart: step === 0,
    atEnd: step === 2,
    prevState: step > 0 ? states[step - 1]! : null,
    currState: states[step]!,
    lastRule:
      step > 0
        ? { from: states[step - 1]!, read: ["_", "_"], to: states[step]!, actions: ["R", "R"] }
        : null,
    tapes: [
      { head: step, cells: ["@", "_", "a"] },
      { head: 0, cells: ["_"] },
    ],
    invariant: "holds",
    outcome: "accept",
    message: "Word accepted.",
  };
}

/** In-memory stand-in for the service: one session, a cursor, the same
 * clamping rules. */
function fakeServer() {
  let cursor = 0;
  const calls: string[] = [];
  const json = (body: unknown, status = 200) =>
    new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    });

  const fetchFn: typeof fetch = async (input, init) => {
    const url = typeof input === "string" ? input : input.toString();
    const method = init?.method ?? "GET";
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    calls.push(`${method} ${path}`);

    if (path === "/api/machines/examples") return json([MACHINE]);
    if (path === "/api/sessions" && method === "POST") {
      const body = JSON.parse(String(init?.body));
      if (body.head0 >= body.tape0.length) {
        return json(
          [{ code: "BadInitial", message: "head0 out of range", locus: "head0" }],
          422,
        );
      }
      cursor = 0;
      return json({ id: "s1", steps: 2, outcome: "accept" }, 201);
    }
    if (path === "/api/sessions/s1" && method === "GET") return json(viewAt(cursor));
    if (path === "/api/sessions/s1/step" && method === "POST") {
      const { direction } = JSON.parse(String(init?.body));
      cursor = Math.max(0, Math.min(2, cursor + (direction === "forward" ? 1 : -1)));
      return json(viewAt(cursor));
    }
    if (path === "/api/sessions/s1" && method === "DELETE") {
      return new Response(null, { status: 204 });
    }
    return json({ detail: "unknown session" }, 404);
  };

  return { fetchFn, calls };
}

describe("App", () => {
  let root: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<div id="app"></div>';
    root = document.getElementById("app")!;
  });

  async function mounted() {
    const server = fakeServer();
    const app = new App(root, new ApiClient("http://fake", server.fetchFn));
    await app.init();
    return { app, server };
  }

  it("lists the bundled machines and their alphabet", async () => {
    await mounted();
    const options = [...root.querySelectorAll("option")].map((o) => o.textContent);
    expect(options).toEqual(["EQABC"]);
    expect(root.querySelector(".alphabet")!.textContent).toBe("alphabet: a b c");
  });

  it("runs a word and renders step 0", async () => {
    const { app } = await mounted();
    root.querySelector<HTMLInputElement>(".word-input")!.value = "@ _ a";
    root.querySelector<HTMLInputElement>(".head-input")!.value = "1";
    await app.run();
    expect(root.querySelector(".banner")!.textContent).toBe("Word accepted.");
    expect(root.querySelector(".step-counter")!.textContent).toBe("step 0 of 2");
    expect(root.querySelectorAll(".tape-strip")).toHaveLength(2);
    expect(root.querySelector(".last-rule")).toBeNull();
  });

  it("steps forward and shows the transition", async () => {
    const { app } = await mounted();
    root.querySelector<HTMLInputElement>(".word-input")!.value = "@ _ a";
    await app.run();
    await app.step("forward");
    expect(root.querySelector(".step-counter")!.textContent).toBe("step 1 of 2");
    expect(root.querySelector(".prev")!.textContent).toBe("S");
    expect(root.querySelector(".state-box.current")!.textContent).toBe("C");
    expect(root.querySelector(".last-rule")!.textContent).toBe("((S (_ _)) (C (R R)))");
  });

  it("forward then back restores the identical tape region", async () => {
    const { app } = await mounted();
    root.querySelector<HTMLInputElement>(".word-input")!.value = "@ _ a";
    await app.run();
    const before = root.querySelector(".tapes-slot")!.innerHTML;
    await app.step("forward");
    await app.step("backward");
    expect(root.querySelector(".tapes-slot")!.innerHTML).toBe(before);
  });

  it("back at step 0 is a no-op with a boundary cue", async () => {
    const { app, server } = await mounted();
    root.querySelector<HTMLInputElement>(".word-input")!.value = "@ _ a";
    await app.run();
    const callsBefore = server.calls.length;
    await app.step("backward");
    expect(server.calls.length).toBe(callsBefore);
    expect(root.querySelector("button.back")!.classList.contains("bump")).toBe(true);
    expect(root.querySelector(".step-counter")!.textContent).toBe("step 0 of 2");
  });

  it("renders 422 diagnostics as a list", async () => {
    const { app } = await mounted();
    root.querySelector<HTMLInputElement>(".word-input")!.value = "@ _ a";
    root.querySelector<HTMLInputElement>(".head-input")!.value = "7";
    await app.run();
    const items = [...root.querySelectorAll(".errors li")].map((n) => n.textContent);
    expect(items).toEqual(["BadInitial: head0 out of range (head0)"]);
    expect(root.querySelector(".banner")).toBeNull();
  });

  it("clear empties the word, the display, and the session", async () => {
    const { app, server } = await mounted();
    root.querySelector<HTMLInputElement>(".word-input")!.value = "@ _ a";
    await app.run();
    await app.clear();
    expect(root.querySelector<HTMLInputElement>(".word-input")!.value).toBe("");
    expect(root.querySelector(".tapes-slot")!.innerHTML).toBe("");
    expect(server.calls).toContain("DELETE /api/sessions/s1");
  });

  it("buttons drive the same paths as the methods", async () => {
    const { app } = await mounted();
    root.querySelector<HTMLInputElement>(".word-input")!.value = "@ _ a";
    root.querySelector<HTMLButtonElement>("button.run")!.click();
    await app.clear(); // queued behind run, so the run has completed
    expect(root.querySelector(".tapes-slot")!.innerHTML).toBe("");
  });
});
