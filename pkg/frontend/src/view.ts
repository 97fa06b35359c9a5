import type { RuleView, StepView, TapeView } from "./types.js";

/** Rule in the footer notation: ((C (c _ _ _)) (F (c _ _ c))). */
export function formatRule(rule: RuleView): string {
  const reads = rule.read.join(" ");
  const actions = rule.actions.join(" ");
  return `((${rule.from} (${reads})) (${rule.to} (${actions})))`;
}

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

/** One tape as two aligned rows, positions above cells, inside its own
 * horizontal scroll container.  The cell under the head carries .head. */
export function renderTapeStrip(doc: Document, tape: TapeView, index: number): HTMLElement {
  const strip = el(doc, "div", "tape-strip");
  strip.dataset.tape = String(index);
  strip.appendChild(el(doc, "div", "tape-label", `t${index}`));

  const scroll = el(doc, "div", "tape-scroll");
  const grid = el(doc, "div", "tape-grid");
  const indices = el(doc, "div", "tape-indices");
  const cells = el(doc, "div", "tape-cells");
  tape.cells.forEach((symbol, i) => {
    indices.appendChild(el(doc, "span", "index", String(i)));
    const cell = el(doc, "span", i === tape.head ? "cell head" : "cell", symbol);
    cells.appendChild(cell);
  });
  grid.appendChild(indices);
  grid.appendChild(cells);
  scroll.appendChild(grid);
  strip.appendChild(scroll);
  return strip;
}

/** All tapes stacked in one vertically scrollable region. */
export function renderTapes(doc: Document, view: StepView): HTMLElement {
  const region = el(doc, "div", "tapes");
  view.tapes.forEach((tape, i) => region.appendChild(renderTapeStrip(doc, tape, i)));
  return region;
}

/** Footer: step counter, previous/current state, last rule, invariant
 * verdict as the color of the current-state box. */
export function renderStatus(doc: Document, view: StepView): HTMLElement {
  const status = el(doc, "div", "status");
  status.appendChild(el(doc, "span", "step-counter", `step ${view.step} of ${view.steps}`));

  const states = el(doc, "div", "states");
  if (view.prevState !== null) {
    states.appendChild(el(doc, "span", "state-box prev", view.prevState));
    states.appendChild(el(doc, "span", "state-arrow", "→"));
  }
  const verdictClass =
    view.invariant === "holds" ? "ok" : view.invariant === "fails" ? "bad" : "neutral";
  states.appendChild(el(doc, "span", `state-box current ${verdictClass}`, view.currState));
  status.appendChild(states);

  if (view.lastRule !== null) {
    status.appendChild(el(doc, "span", "last-rule", formatRule(view.lastRule)));
  }
  return status;
}

/** Outcome banner, styled by outcome, text from the service message. */
export function renderBanner(doc: Document, view: StepView): HTMLElement {
  return el(doc, "div", `banner ${view.outcome}`, view.message);
}
