import { show } from "./panels.js";
import type { SavedScenario } from "./state.js";

export interface CompareTable {
  header: string[];
  rows: { label: string; cells: string[] }[];
}

// Side-by-side table of saved evaluations, one column per scenario.
export function compareTable(saved: SavedScenario[]): CompareTable {
  const header = ["", ...saved.map((s) => s.name)];
  const pick = (label: string, cell: (s: SavedScenario) => string) => ({
    label,
    cells: saved.map(cell),
  });
  return {
    header,
    rows: [
      pick("project", (s) => s.evaluation.projectId),
      pick("current level", (s) => show(s.evaluation.currentLevel)),
      pick("target level", (s) => show(s.evaluation.targetLevel)),
      pick("benefit delta", (s) => show(s.evaluation.benefitDelta)),
      pick("total cost", (s) => show(s.evaluation.totalCost)),
      pick("barriers crossed", (s) => s.evaluation.barriersCrossed.map((b) => b.category).join(", ") || "none"),
      pick("target percentile", (s) => show(s.evaluation.targetPercentile)),
      pick("benchmark gap", (s) => s.evaluation.leadersGapNote ?? "n/a"),
    ],
  };
}
