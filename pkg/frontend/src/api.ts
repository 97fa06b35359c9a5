import type {
  Diagnostic,
  MachineDef,
  SessionSummary,
  StepDirection,
  StepView,
} from "./types.js";

/** Raised for any non-2xx response.  A 422 carries the validation
 * diagnostics the service returns as a bare array. */
export class ApiError extends Error {
  status: number;
  diagnostics: Diagnostic[];

  constructor(status: number, message: string, diagnostics: Diagnostic[] = []) {
    super(message);
    this.status = status;
    this.diagnostics = diagnostics;
  }
}

async function raise(res: Response): Promise<never> {
  let body: unknown = null;
  try {
    body = await res.json();
  } catch {
    // non-JSON error body; fall through to the status line
  }
  if (res.status === 422 && Array.isArray(body)) {
    throw new ApiError(res.status, "validation failed", body as Diagnostic[]);
  }
  const detail =
    body && typeof body === "object" && "detail" in body
      ? String((body as { detail: unknown }).detail)
      : `${res.status} ${res.statusText}`;
  throw new ApiError(res.status, detail);
}

export class ApiClient {
  baseUrl: string;
  private fetchFn: typeof fetch;

  constructor(baseUrl = "", fetchFn: typeof fetch = fetch) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const res = await this.fetchFn(`${this.baseUrl}${path}`, init);
    if (!res.ok) await raise(res);
    return res;
  }

  async examples(): Promise<MachineDef[]> {
    const res = await this.request("/api/machines/examples");
    return res.json();
  }

  async createSession(
    machine: MachineDef,
    tape0: string[],
    head0: number,
    threshold?: number,
  ): Promise<SessionSummary> {
    const body: Record<string, unknown> = { machine, tape0, head0 };
    if (threshold !== undefined) body.threshold = threshold;
    const res = await this.request("/api/sessions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return res.json();
  }

  async view(id: string): Promise<StepView> {
    const res = await this.request(`/api/sessions/${id}`);
    return res.json();
  }

  async step(id: string, direction: StepDirection): Promise<StepView> {
    const res = await this.request(`/api/sessions/${id}/step`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ direction }),
    });
    return res.json();
  }

  async remove(id: string): Promise<void> {
    await this.request(`/api/sessions/${id}`, { method: "DELETE" });
  }
}
