import type { DefaultsDoc, DistributionDoc, EvalResult, ScenarioDoc } from "./documents.js";

// The UI is served by the same process that answers /api/v1, so every
// request is same-origin and paths stay relative.

export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function request<T>(fetchFn: FetchLike, method: string, path: string, body?: unknown): Promise<T> {
  const init: RequestInit = { method };
  if (body !== undefined) {
    init.headers = { "Content-Type": "application/json" };
    init.body = JSON.stringify(body);
  }
  const response = await fetchFn(path, init);
  const text = await response.text();
  if (!response.ok) {
    let detail = text;
    try {
      detail = (JSON.parse(text) as { error?: string }).error ?? text;
    } catch {
      // error body was not JSON, show it raw
    }
    throw new ApiError(response.status, detail);
  }
  return JSON.parse(text) as T;
}

export class ApiClient {
  private fetchFn: FetchLike;

  constructor(fetchFn?: FetchLike) {
    this.fetchFn = fetchFn ?? ((input, init) => fetch(input, init));
  }

  evaluate(scenario: ScenarioDoc): Promise<EvalResult> {
    return request(this.fetchFn, "POST", "/api/v1/model/evaluate", scenario);
  }

  defaults(): Promise<DefaultsDoc> {
    return request(this.fetchFn, "GET", "/api/v1/model/defaults");
  }

  distribution(filters?: Record<string, string>): Promise<DistributionDoc> {
    const query = filters ? new URLSearchParams(filters).toString() : "";
    const path = query ? `/api/v1/benchmark/distribution?${query}` : "/api/v1/benchmark/distribution";
    return request(this.fetchFn, "GET", path);
  }
}
