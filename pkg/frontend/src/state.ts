import type { EvalResult, ScenarioDoc, TargetEvaluation } from "./documents.js";
import { Debouncer, DRAG_DEBOUNCE_MS, EvaluateQueue, type EvaluateFn } from "./evaluateQueue.js";

// Single source of truth for the app. The scenario holds what the user
// asked for; the result holds what the service answered. Panels render
// from the result alone, so a number on screen is always a number the
// service sent back.

export interface SavedScenario {
  name: string;
  scenario: ScenarioDoc;
  evaluation: TargetEvaluation;
}

export interface WorkbenchSnapshot {
  scenario: ScenarioDoc;
  result: EvalResult | null;
  saved: SavedScenario[];
  busy: boolean;
  lastError: string | null;
}

type Listener = (snapshot: WorkbenchSnapshot) => void;

export class WorkbenchStore {
  private scenario: ScenarioDoc;
  private result: EvalResult | null = null;
  private saved: SavedScenario[] = [];
  private lastError: string | null = null;
  private listeners: Listener[] = [];
  private queue: EvaluateQueue;
  private dragDebounce: Debouncer;

  constructor(evaluateFn: EvaluateFn, scenario: ScenarioDoc, debounceMs: number = DRAG_DEBOUNCE_MS) {
    this.scenario = scenario;
    this.queue = new EvaluateQueue(
      evaluateFn,
      (result) => {
        this.result = result;
        this.lastError = null;
        this.emit();
      },
      (error) => {
        this.lastError = error instanceof Error ? error.message : String(error);
        this.emit();
      },
    );
    this.dragDebounce = new Debouncer(debounceMs, () => this.queue.submit(this.scenario));
  }

  snapshot(): WorkbenchSnapshot {
    return {
      scenario: this.scenario,
      result: this.result,
      saved: this.saved,
      busy: this.queue.busy,
      lastError: this.lastError,
    };
  }

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  // Slider/drag path: update the intent immediately (the handle follows
  // the pointer) but let the debouncer decide when to ask the service.
  dragTarget(level: number): void {
    this.scenario = { ...this.scenario, targetLevel: level };
    this.emit();
    this.dragDebounce.schedule();
  }

  // Form path: a full scenario replacement evaluates right away.
  commitScenario(scenario: ScenarioDoc): void {
    this.dragDebounce.cancel();
    this.scenario = scenario;
    this.emit();
    this.queue.submit(this.scenario);
  }

  saveCurrent(name: string): boolean {
    if (this.result === null) {
      return false;
    }
    this.saved = [...this.saved, {
      name,
      scenario: this.scenario,
      evaluation: this.result.evaluation,
    }];
    this.emit();
    return true;
  }

  removeSaved(index: number): void {
    this.saved = this.saved.filter((_, i) => i !== index);
    this.emit();
  }

  private emit(): void {
    const snapshot = this.snapshot();
    for (const listener of this.listeners) {
      listener(snapshot);
    }
  }
}
