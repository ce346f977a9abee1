import type {
  CostBand,
  CostPoint,
  EvalResult,
  RoadmapMarker,
  TargetEvaluation,
} from "./documents.js";

// View models for the three panels. Everything here is rearrangement:
// numbers pass through from the service response untouched, and the text
// shown for a number is String(value), full precision.

export function show(value: number | null): string {
  return value === null ? "n/a" : String(value);
}

export interface SummaryRow {
  label: string;
  value: string;
}

export function summaryRows(evaluation: TargetEvaluation): SummaryRow[] {
  return [
    { label: "project", value: evaluation.projectId },
    { label: "current level", value: show(evaluation.currentLevel) },
    { label: "target level", value: show(evaluation.targetLevel) },
    { label: "benefit delta", value: show(evaluation.benefitDelta) },
    { label: "total cost", value: show(evaluation.totalCost) },
    { label: "barriers crossed", value: String(evaluation.barriersCrossed.length) },
    { label: "target percentile", value: show(evaluation.targetPercentile) },
    { label: "benchmark gap", value: evaluation.leadersGapNote ?? "n/a" },
  ];
}

export interface BarrierRow {
  category: string;
  position: string;
  fixedCost: string;
  rationale: string;
}

export function barrierRows(evaluation: TargetEvaluation): BarrierRow[] {
  return evaluation.barriersCrossed.map((b) => ({
    category: b.category,
    position: show(b.position),
    fixedCost: show(b.fixedCost),
    rationale: b.rationale,
  }));
}

export interface BenefitPanel {
  series: [number, number][];
  guides: { kind: string; position: number; text: string }[];
}

export function benefitPanel(result: EvalResult): BenefitPanel {
  const roadmap = result.roadmap;
  return {
    series: roadmap.benefitSeries,
    guides: [
      { kind: "current", position: roadmap.currentLevel, text: `current ${show(roadmap.currentLevel)}` },
      { kind: "target", position: roadmap.targetLevel, text: `target ${show(roadmap.targetLevel)}` },
      {
        kind: "costSpiralTrigger",
        position: roadmap.breakpoints.costSpiralTrigger,
        text: `cost spiral trigger ${show(roadmap.breakpoints.costSpiralTrigger)}`,
      },
      {
        kind: "valueCascadePoint",
        position: roadmap.breakpoints.valueCascadePoint,
        text: `value cascade point ${show(roadmap.breakpoints.valueCascadePoint)}`,
      },
    ],
  };
}

export interface CostSegment {
  band: CostBand;
  points: CostPoint[];
}

// Consecutive same-band runs, so the renderer can color each stretch.
// Concatenating the segments gives back the series unchanged.
export function costSegments(series: CostPoint[]): CostSegment[] {
  const segments: CostSegment[] = [];
  for (const point of series) {
    const last = segments[segments.length - 1];
    if (last !== undefined && last.band === point.band) {
      last.points.push(point);
    } else {
      segments.push({ band: point.band, points: [point] });
    }
  }
  return segments;
}

export interface CostPanel {
  segments: CostSegment[];
  totalCostText: string;
  zoneText: string;
  barriers: BarrierRow[];
}

export function costPanel(result: EvalResult): CostPanel {
  const zone = result.evaluation.escalationZone;
  return {
    segments: costSegments(result.roadmap.costSeries),
    totalCostText: show(result.evaluation.totalCost),
    zoneText: `escalation zone ${show(zone.from)} to ${show(zone.to)}`,
    barriers: barrierRows(result.evaluation),
  };
}

export interface RoadmapPin {
  kind: string;
  position: number;
  label: string;
  positionText: string;
}

export function roadmapPins(markers: RoadmapMarker[]): RoadmapPin[] {
  return markers.map((m) => ({
    kind: m.kind,
    position: m.position,
    label: m.label,
    positionText: show(m.position),
  }));
}
