import type { EvalResult, ScenarioDoc } from "./documents.js";

// Drag events fire far faster than anyone wants to hit the service.
// Requests are debounced, then serialized: at most one evaluate call is
// in flight, newer submissions replace the queued one, and every request
// carries a sequence number so a response that arrives after a newer
// submission is dropped instead of overwriting fresher state.

export const DRAG_DEBOUNCE_MS = 120;

export type EvaluateFn = (scenario: ScenarioDoc) => Promise<EvalResult>;

export class Debouncer {
  private delayMs: number;
  private fn: () => void;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(delayMs: number, fn: () => void) {
    this.delayMs = delayMs;
    this.fn = fn;
  }

  schedule(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      this.fn();
    }, this.delayMs);
  }

  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }
}

export class EvaluateQueue {
  private evaluateFn: EvaluateFn;
  private onResult: (result: EvalResult) => void;
  private onError: (error: unknown) => void;

  private intentSeq = 0;
  private appliedSeq = 0;
  private inFlight = false;
  private pending: ScenarioDoc | null = null;

  constructor(
    evaluateFn: EvaluateFn,
    onResult: (result: EvalResult) => void,
    onError: (error: unknown) => void,
  ) {
    this.evaluateFn = evaluateFn;
    this.onResult = onResult;
    this.onError = onError;
  }

  submit(scenario: ScenarioDoc): void {
    this.intentSeq += 1;
    if (this.inFlight) {
      this.pending = scenario;
    } else {
      this.issue(scenario);
    }
  }

  get busy(): boolean {
    return this.inFlight || this.pending !== null;
  }

  private issue(scenario: ScenarioDoc): void {
    const seq = this.intentSeq;
    this.inFlight = true;
    this.evaluateFn(scenario).then(
      (result) => this.settle(seq, () => this.onResult(result)),
      (error) => this.settle(seq, () => this.onError(error)),
    );
  }

  private settle(seq: number, deliver: () => void): void {
    this.inFlight = false;
    if (this.pending !== null) {
      const next = this.pending;
      this.pending = null;
      this.issue(next);
    }
    // A newer submission, or an already applied newer response, makes
    // this one stale.
    if (seq === this.intentSeq && seq > this.appliedSeq) {
      this.appliedSeq = seq;
      deliver();
    }
  }
}
