import { afterEach, describe, expect, it, vi } from "vitest";

import { isBarrierCategory, type EvalResult, type ScenarioDoc } from "../src/documents.js";
import { DRAG_DEBOUNCE_MS } from "../src/evaluateQueue.js";
import { barrierRows, summaryRows } from "../src/panels.js";
import { WorkbenchStore } from "../src/state.js";
import { loadDemoScenario, loadFixture } from "./helpers.js";

const demoScenario = loadDemoScenario();
const identityResult = loadFixture("eval_identity.json");
const below = loadFixture("eval_target_5p4.json");
const above = loadFixture("eval_target_5p6.json");

// Canned service responses keyed by requested target, so the store gets
// real server-built documents without the tests doing any model math.
function cannedEvaluate(calls: number[] = []) {
  const byTarget = new Map<number, EvalResult>([
    [4, identityResult],
    [5.4, below],
    [5.6, above],
  ]);
  return async (scenario: ScenarioDoc): Promise<EvalResult> => {
    calls.push(scenario.targetLevel);
    const result = byTarget.get(scenario.targetLevel);
    if (result === undefined) {
      throw new Error(`no canned response for target ${scenario.targetLevel}`);
    }
    return result;
  };
}

function withTarget(target: number): ScenarioDoc {
  return { ...demoScenario, targetLevel: target };
}

afterEach(() => {
  vi.useRealTimers();
});

describe("WorkbenchStore", () => {
  it("identity scenario shows zero benefit delta and zero cost", async () => {
    vi.useFakeTimers();
    const store = new WorkbenchStore(cannedEvaluate(), withTarget(4));
    store.commitScenario(withTarget(4));
    await vi.advanceTimersByTimeAsync(0);

    const result = store.snapshot().result;
    expect(result).not.toBeNull();
    expect(result!.evaluation.benefitDelta).toBe(0);
    expect(result!.evaluation.totalCost).toBe(0);
    expect(result!.evaluation.barriersCrossed).toEqual([]);

    const byLabel = new Map(summaryRows(result!.evaluation).map((r) => [r.label, r.value]));
    expect(byLabel.get("benefit delta")).toBe("0");
    expect(byLabel.get("total cost")).toBe("0");
    expect(byLabel.get("barriers crossed")).toBe("0");
  });

  it("dragging across the 5.5 barrier adds exactly that barrier", async () => {
    vi.useFakeTimers();
    const calls: number[] = [];
    const store = new WorkbenchStore(cannedEvaluate(calls), withTarget(5.4));
    store.commitScenario(withTarget(5.4));
    await vi.advanceTimersByTimeAsync(0);

    const beforeDrag = store.snapshot().result!;
    expect(beforeDrag.evaluation.barriersCrossed).toEqual([]);

    // A drag is a burst of positions; only the rest position is evaluated.
    store.dragTarget(5.45);
    store.dragTarget(5.52);
    store.dragTarget(5.6);
    expect(store.snapshot().scenario.targetLevel).toBe(5.6);
    await vi.advanceTimersByTimeAsync(DRAG_DEBOUNCE_MS);

    const afterDrag = store.snapshot().result!;
    expect(calls).toEqual([5.4, 5.6]);
    expect(afterDrag.evaluation.barriersCrossed).toHaveLength(1);

    const crossing = afterDrag.evaluation.barriersCrossed[0];
    expect(crossing.position).toBe(5.5);
    expect(crossing.category).toBe("TestAdequacy");
    expect(isBarrierCategory(crossing.category)).toBe(true);

    const rows = barrierRows(afterDrag.evaluation);
    expect(rows).toHaveLength(1);
    expect(rows[0].category).toBe("TestAdequacy");
    expect(rows[0].rationale).not.toBe("");
  });

  it("a drag burst issues no request before the debounce delay elapses", async () => {
    vi.useFakeTimers();
    const calls: number[] = [];
    const store = new WorkbenchStore(cannedEvaluate(calls), withTarget(5.4));

    store.dragTarget(5.6);
    await vi.advanceTimersByTimeAsync(DRAG_DEBOUNCE_MS - 1);
    expect(calls).toEqual([]);
    await vi.advanceTimersByTimeAsync(1);
    expect(calls).toEqual([5.6]);
  });

  it("surfaces evaluate errors and clears them on the next success", async () => {
    vi.useFakeTimers();
    const store = new WorkbenchStore(cannedEvaluate(), withTarget(4));
    store.commitScenario(withTarget(9.9));
    await vi.advanceTimersByTimeAsync(0);
    expect(store.snapshot().lastError).toContain("no canned response");

    store.commitScenario(withTarget(4));
    await vi.advanceTimersByTimeAsync(0);
    expect(store.snapshot().lastError).toBeNull();
    expect(store.snapshot().result).not.toBeNull();
  });

  it("saves evaluated scenarios for comparison and removes them", async () => {
    vi.useFakeTimers();
    const store = new WorkbenchStore(cannedEvaluate(), withTarget(4));
    expect(store.saveCurrent("too early")).toBe(false);

    store.commitScenario(withTarget(4));
    await vi.advanceTimersByTimeAsync(0);
    expect(store.saveCurrent("baseline")).toBe(true);

    store.commitScenario(withTarget(5.6));
    await vi.advanceTimersByTimeAsync(0);
    expect(store.saveCurrent("past the barrier")).toBe(true);

    const saved = store.snapshot().saved;
    expect(saved.map((s) => s.name)).toEqual(["baseline", "past the barrier"]);
    expect(saved[0].evaluation.totalCost).toBe(0);
    expect(saved[1].evaluation.barriersCrossed).toHaveLength(1);

    store.removeSaved(0);
    expect(store.snapshot().saved.map((s) => s.name)).toEqual(["past the barrier"]);
  });

  it("notifies listeners with fresh snapshots", async () => {
    vi.useFakeTimers();
    const store = new WorkbenchStore(cannedEvaluate(), withTarget(4));
    const seen: (boolean | null)[] = [];
    store.onChange((snapshot) => seen.push(snapshot.result !== null));

    store.commitScenario(withTarget(4));
    await vi.advanceTimersByTimeAsync(0);
    // One emit when the scenario changed (no result yet), one when the
    // response was applied.
    expect(seen[0]).toBe(false);
    expect(seen[seen.length - 1]).toBe(true);
  });
});
