import type { ScenarioBarrier, ScenarioDoc, ScenarioGate } from "./documents.js";

// Sidebar form <-> scenario.v1. The form holds strings (what the inputs
// contain); building a scenario validates them and reports the first bad
// field by name so the form can point at it.

export class FormError extends Error {
  field: string;

  constructor(field: string, message: string) {
    super(message);
    this.field = field;
  }
}

export interface BarrierFormRow {
  category: string;
  position: string;
  fixedCost: string;
  rationale: string;
}

export interface ScenarioFormValues {
  projectId: string;
  currentLevel: string;
  targetLevel: string;
  epsilon: string;
  kSlope: string;
  baseMarginalCost: string;
  escalation: string;
  barrierSpacing: string;
  barriers: BarrierFormRow[];
  gatePolicy: string;
  gateFloor: string;
  benchmarkScores: string;
}

export function formFromScenario(doc: ScenarioDoc): ScenarioFormValues {
  return {
    projectId: doc.projectId,
    currentLevel: String(doc.currentLevel),
    targetLevel: String(doc.targetLevel),
    epsilon: String(doc.curve.epsilon),
    kSlope: String(doc.curve.kSlope),
    baseMarginalCost: String(doc.cost.baseMarginalCost),
    escalation: String(doc.cost.escalation),
    barrierSpacing: String(doc.cost.barrierSpacing),
    barriers: doc.cost.barriers.map((b) => ({
      category: b.category,
      position: String(b.position),
      fixedCost: String(b.fixedCost),
      rationale: b.rationale,
    })),
    gatePolicy: doc.gate?.policy ?? "",
    gateFloor: doc.gate?.floor !== undefined ? String(doc.gate.floor) : "",
    benchmarkScores:
      doc.benchmark !== undefined && "scores" in doc.benchmark
        ? doc.benchmark.scores.join(", ")
        : "",
  };
}

function parseNumber(field: string, raw: string): number {
  const trimmed = raw.trim();
  if (trimmed === "") {
    throw new FormError(field, `${field} is required`);
  }
  const value = Number(trimmed);
  if (!Number.isFinite(value)) {
    throw new FormError(field, `${field} must be a number, got "${raw}"`);
  }
  return value;
}

export function scenarioFromForm(values: ScenarioFormValues): ScenarioDoc {
  const projectId = values.projectId.trim();
  if (projectId === "") {
    throw new FormError("projectId", "project id is required");
  }
  const barriers: ScenarioBarrier[] = values.barriers.map((row, i) => {
    if (row.category.trim() === "") {
      throw new FormError(`barriers[${i}].category`, `barrier ${i + 1} needs a category`);
    }
    return {
      category: row.category.trim(),
      position: parseNumber(`barriers[${i}].position`, row.position),
      fixedCost: parseNumber(`barriers[${i}].fixedCost`, row.fixedCost),
      rationale: row.rationale.trim(),
    };
  });

  // Key order below matches what the service writes, so a downloaded
  // scenario diffs cleanly against server-produced ones.
  const doc: ScenarioDoc = {
    schema: "scenario.v1",
    projectId,
    currentLevel: parseNumber("currentLevel", values.currentLevel),
    targetLevel: parseNumber("targetLevel", values.targetLevel),
    curve: {
      epsilon: parseNumber("epsilon", values.epsilon),
      kSlope: parseNumber("kSlope", values.kSlope),
    },
    cost: {
      baseMarginalCost: parseNumber("baseMarginalCost", values.baseMarginalCost),
      escalation: parseNumber("escalation", values.escalation),
      barrierSpacing: parseNumber("barrierSpacing", values.barrierSpacing),
      barriers,
    },
  };

  if (values.gatePolicy.trim() !== "") {
    const gate: ScenarioGate = { policy: values.gatePolicy.trim() };
    if (values.gateFloor.trim() !== "") {
      gate.floor = parseNumber("gateFloor", values.gateFloor);
    }
    doc.gate = gate;
  }

  const scoresRaw = values.benchmarkScores.trim();
  if (scoresRaw !== "") {
    const scores = scoresRaw
      .split(/[\s,]+/)
      .filter((part) => part !== "")
      .map((part, i) => parseNumber(`benchmarkScores[${i}]`, part));
    doc.benchmark = { scores };
  }

  return doc;
}

export function scenarioJson(doc: ScenarioDoc): string {
  return JSON.stringify(doc, null, 2) + "\n";
}

export function scenarioFileName(doc: ScenarioDoc): string {
  const slug = doc.projectId.replace(/[^A-Za-z0-9_-]+/g, "-") || "scenario";
  return `${slug}.scenario.json`;
}

export function parseScenarioFile(text: string): ScenarioDoc {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (error) {
    throw new FormError("file", `not valid JSON: ${error instanceof Error ? error.message : error}`);
  }
  if (typeof data !== "object" || data === null || (data as { schema?: unknown }).schema !== "scenario.v1") {
    throw new FormError("file", "expected a scenario.v1 document");
  }
  return data as ScenarioDoc;
}
