/** Wire types for the session API.  Field names mirror the JSON exactly. */

export interface TapeView {
  head: number;
  cells: string[];
}

export interface RuleView {
  from: string;
  read: string[];
  to: string;
  actions: string[];
}

export type InvariantVerdict = "holds" | "fails" | "unavailable";
export type Outcome = "accept" | "reject" | "unknown";

export interface StepView {
  id: string;
  step: number;
  steps: number;
  atStart: boolean;
  atEnd: boolean;
  prevState: string | null;
  currState: string;
  lastRule: RuleView | null;
  tapes: TapeView[];
  invariant: InvariantVerdict;
  outcome: Outcome;
  message: string;
}

export interface SessionSummary {
  id: string;
  steps: number;
  outcome: Outcome;
}

export interface Diagnostic {
  code: string;
  message: string;
  locus: string | null;
}

export interface MachineRule {
  from: string;
  read: string[];
  to: string;
  actions: string[];
}

export interface MachineDef {
  name: string;
  tapes: number;
  states: string[];
  alphabet: string[];
  start: string;
  finals: string[];
  accept: string;
  rules: MachineRule[];
}

export type StepDirection = "forward" | "backward";
