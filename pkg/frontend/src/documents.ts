// Wire types for the workbench documents. These mirror the JSON the
// service emits; the UI never derives any of these numbers itself.

export const BARRIER_CATEGORIES = [
  "TestAdequacy",
  "ArchitecturalChange",
  "DeveloperTraining",
  "KnowledgeRecovery",
  "DomainKnowledge",
  "RegulatoryAspects",
  "MajorCodeSmells",
] as const;

export type BarrierCategory = (typeof BARRIER_CATEGORIES)[number];

export function isBarrierCategory(name: string): name is BarrierCategory {
  return (BARRIER_CATEGORIES as readonly string[]).includes(name);
}

export interface ScenarioBarrier {
  category: string;
  position: number;
  fixedCost: number;
  rationale: string;
}

export interface ScenarioGate {
  policy: string;
  floor?: number;
}

export interface ScenarioDoc {
  schema: "scenario.v1";
  projectId: string;
  currentLevel: number;
  targetLevel: number;
  curve: {
    epsilon: number;
    kSlope: number;
  };
  cost: {
    baseMarginalCost: number;
    escalation: number;
    barrierSpacing: number;
    barriers: ScenarioBarrier[];
  };
  gate?: ScenarioGate;
  benchmark?: { scores: number[] } | { n: number; p10: number; p50: number; p90: number };
}

export interface BarrierCrossing {
  category: string;
  position: number;
  fixedCost: number;
  rationale: string;
}

export interface TargetEvaluation {
  projectId: string;
  currentLevel: number;
  targetLevel: number;
  benefitDelta: number;
  totalCost: number;
  barriersCrossed: BarrierCrossing[];
  escalationZone: { from: number; to: number };
  targetPercentile: number | null;
  leadersGapNote: string | null;
}

export type CostBand = "green" | "yellow" | "red";

export interface CostPoint {
  level: number;
  marginal: number;
  band: CostBand;
}

export interface RoadmapMarker {
  kind: string;
  position: number;
  label: string;
}

export interface RoadmapData {
  projectId: string;
  currentLevel: number;
  targetLevel: number;
  breakpoints: {
    costSpiralTrigger: number;
    valueCascadePoint: number;
  };
  benefitSeries: [number, number][];
  costSeries: CostPoint[];
  markers: RoadmapMarker[];
}

export interface EvalResult {
  schema: "evalresult.v1";
  evaluation: TargetEvaluation;
  roadmap: RoadmapData;
}

export interface DefaultsDoc {
  schema: "defaults.v1";
  curve: { epsilon: number; kSlope: number };
  cost: { baseMarginalCost: number; escalation: number; barrierSpacing: number };
  categories: { name: string; fixedCost: number; rationale: string }[];
  gatePolicies: string[];
}

export interface DistributionDoc {
  schema: "distribution.v1";
  n: number;
  p10: number;
  p50: number;
  p90: number;
  method: string;
}
