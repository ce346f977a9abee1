import { ApiClient } from "./api.js";
import type { DefaultsDoc, EvalResult, ScenarioDoc } from "./documents.js";
import { benefitPanel, costPanel, roadmapPins, summaryRows } from "./panels.js";
import {
  FormError,
  formFromScenario,
  parseScenarioFile,
  scenarioFileName,
  scenarioFromForm,
  scenarioJson,
  type ScenarioFormValues,
} from "./scenarioForm.js";
import { WorkbenchStore, type WorkbenchSnapshot } from "./state.js";
import { compareTable } from "./compare.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const PLOT = { width: 560, height: 240, padLeft: 44, padRight: 16, padTop: 18, padBottom: 30 };
const LEVEL_MIN = 1;
const LEVEL_MAX = 10;

const MARKER_COLORS: Record<string, string> = {
  current: "#8a8f98",
  target: "#4c9aff",
  costSpiralTrigger: "#e5484d",
  valueCascadePoint: "#30a46c",
  barrier: "#f5a623",
  gate: "#b881f2",
  laggards: "#6e56cf",
  leaders: "#6e56cf",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function svg(tag: string, attrs: Record<string, string> = {}): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

function levelToX(level: number): number {
  const span = PLOT.width - PLOT.padLeft - PLOT.padRight;
  return PLOT.padLeft + ((level - LEVEL_MIN) / (LEVEL_MAX - LEVEL_MIN)) * span;
}

function xToLevel(x: number): number {
  const span = PLOT.width - PLOT.padLeft - PLOT.padRight;
  const level = LEVEL_MIN + ((x - PLOT.padLeft) / span) * (LEVEL_MAX - LEVEL_MIN);
  return Math.min(LEVEL_MAX, Math.max(LEVEL_MIN, level));
}

function valueToY(value: number, max: number): number {
  const span = PLOT.height - PLOT.padTop - PLOT.padBottom;
  return PLOT.height - PLOT.padBottom - (value / max) * span;
}

function axis(parent: SVGElement): void {
  const y = PLOT.height - PLOT.padBottom;
  parent.appendChild(svg("line", {
    x1: String(PLOT.padLeft), y1: String(y),
    x2: String(PLOT.width - PLOT.padRight), y2: String(y),
    class: "axis",
  }));
  for (let level = LEVEL_MIN; level <= LEVEL_MAX; level++) {
    const x = levelToX(level);
    parent.appendChild(svg("line", { x1: String(x), y1: String(y), x2: String(x), y2: String(y + 4), class: "axis" }));
    const tick = svg("text", { x: String(x), y: String(y + 16), class: "tick" });
    tick.textContent = String(level);
    parent.appendChild(tick);
  }
}

function guideLine(parent: SVGElement, position: number, color: string, label: string): void {
  const x = levelToX(position);
  parent.appendChild(svg("line", {
    x1: String(x), y1: String(PLOT.padTop),
    x2: String(x), y2: String(PLOT.height - PLOT.padBottom),
    stroke: color, "stroke-dasharray": "4 3", class: "guide",
  }));
  const text = svg("text", { x: String(x + 3), y: String(PLOT.padTop + 10), fill: color, class: "guide-label" });
  text.textContent = label;
  parent.appendChild(text);
}

// --- panel renderers ---------------------------------------------------------

function renderSummary(container: HTMLElement, result: EvalResult): void {
  container.textContent = "";
  for (const row of summaryRows(result.evaluation)) {
    const cell = el("div", { class: "summary-cell" });
    cell.appendChild(el("div", { class: "summary-label" }, row.label));
    cell.appendChild(el("div", { class: "summary-value" }, row.value));
    container.appendChild(cell);
  }
}

function renderBenefit(container: HTMLElement, result: EvalResult): void {
  container.textContent = "";
  const panel = benefitPanel(result);
  const plot = svg("svg", { viewBox: `0 0 ${PLOT.width} ${PLOT.height}`, class: "plot" });
  axis(plot);
  const points = panel.series
    .map(([level, benefit]) => `${levelToX(level)},${valueToY(benefit, 1)}`)
    .join(" ");
  plot.appendChild(svg("polyline", { points, class: "benefit-line" }));
  for (const guide of panel.guides) {
    guideLine(plot, guide.position, MARKER_COLORS[guide.kind] ?? "#8a8f98", guide.text);
  }
  container.appendChild(plot);
}

function renderCost(container: HTMLElement, result: EvalResult): void {
  container.textContent = "";
  const panel = costPanel(result);
  const maxMarginal = Math.max(...result.roadmap.costSeries.map((p) => p.marginal));
  const plot = svg("svg", { viewBox: `0 0 ${PLOT.width} ${PLOT.height}`, class: "plot" });
  axis(plot);
  for (const segment of panel.segments) {
    const points = segment.points
      .map((p) => `${levelToX(p.level)},${valueToY(p.marginal, maxMarginal)}`)
      .join(" ");
    plot.appendChild(svg("polyline", { points, class: `cost-line band-${segment.band}` }));
  }
  container.appendChild(plot);

  container.appendChild(el("div", { class: "panel-note" }, panel.zoneText));
  container.appendChild(el("div", { class: "panel-note" }, `total cost ${panel.totalCostText}`));

  const list = el("ul", { class: "barrier-list" });
  for (const row of panel.barriers) {
    const item = el("li");
    item.appendChild(el("span", { class: "barrier-category" }, row.category));
    item.appendChild(el("span", {}, ` at ${row.position}, fixed cost ${row.fixedCost}: ${row.rationale}`));
    list.appendChild(item);
  }
  if (panel.barriers.length === 0) {
    list.appendChild(el("li", {}, "no barriers crossed"));
  }
  container.appendChild(list);
}

function renderRoadmap(
  container: HTMLElement,
  result: EvalResult,
  pendingTarget: number,
  onDrag: (level: number) => void,
): void {
  container.textContent = "";
  const plot = svg("svg", { viewBox: `0 0 ${PLOT.width} ${PLOT.height}`, class: "plot" });
  axis(plot);

  const lanes = [28, 52, 76, 100, 124, 148];
  const pins = roadmapPins(result.roadmap.markers);
  pins.forEach((pin, i) => {
    const x = levelToX(pin.position);
    const y = PLOT.padTop + lanes[i % lanes.length];
    const color = MARKER_COLORS[pin.kind] ?? "#8a8f98";
    plot.appendChild(svg("line", {
      x1: String(x), y1: String(y),
      x2: String(x), y2: String(PLOT.height - PLOT.padBottom),
      stroke: color, "stroke-dasharray": "2 3", class: "pin-stem",
    }));
    plot.appendChild(svg("circle", { cx: String(x), cy: String(y), r: "4", fill: color }));
    const text = svg("text", { x: String(x + 7), y: String(y + 4), fill: color, class: "pin-label" });
    text.textContent = `${pin.label} (${pin.positionText})`;
    plot.appendChild(text);
  });

  // Drag handle reflects the pending target (the user's intent), which
  // may be ahead of the last evaluated result while a request is queued.
  const handleX = levelToX(pendingTarget);
  const handleY = PLOT.height - PLOT.padBottom;
  const handle = svg("g", { class: "target-handle" });
  handle.appendChild(svg("circle", { cx: String(handleX), cy: String(handleY), r: "9" }));
  handle.appendChild(svg("circle", { cx: String(handleX), cy: String(handleY), r: "3", class: "handle-dot" }));
  plot.appendChild(handle);

  const minLevel = result.roadmap.currentLevel;
  handle.addEventListener("pointerdown", (down: Event) => {
    const pointerDown = down as PointerEvent;
    pointerDown.preventDefault();
    const svgRoot = plot as unknown as SVGSVGElement;
    const move = (event: Event) => {
      const pointer = event as PointerEvent;
      const rect = svgRoot.getBoundingClientRect();
      const x = ((pointer.clientX - rect.left) / rect.width) * PLOT.width;
      // Only improvement targets are accepted, so never drag below current.
      const level = Math.max(minLevel, Math.round(xToLevel(x) * 100) / 100);
      onDrag(level);
    };
    const up = () => {
      window.removeEventListener("pointermove", move);
      window.removeEventListener("pointerup", up);
    };
    window.addEventListener("pointermove", move);
    window.addEventListener("pointerup", up);
  });

  container.appendChild(plot);
}

function renderCompare(container: HTMLElement, snapshot: WorkbenchSnapshot, store: WorkbenchStore): void {
  container.textContent = "";
  if (snapshot.saved.length === 0) {
    container.appendChild(el("p", { class: "panel-note" }, "save a scenario to start a comparison"));
    return;
  }
  const model = compareTable(snapshot.saved);
  const table = el("table", { class: "compare-table" });
  const head = el("tr");
  model.header.forEach((name, i) => {
    const cell = el("th", {}, name);
    if (i > 0) {
      const drop = el("button", { class: "drop-saved", title: "remove" }, "x");
      drop.addEventListener("click", () => store.removeSaved(i - 1));
      cell.appendChild(drop);
    }
    head.appendChild(cell);
  });
  table.appendChild(head);
  for (const row of model.rows) {
    const tr = el("tr");
    tr.appendChild(el("th", {}, row.label));
    for (const cell of row.cells) {
      tr.appendChild(el("td", {}, cell));
    }
    table.appendChild(tr);
  }
  container.appendChild(table);
}

// --- sidebar form --------------------------------------------------------------

interface FormRefs {
  root: HTMLElement;
  fields: Map<string, HTMLInputElement>;
  barriers: HTMLElement;
  error: HTMLElement;
}

function fieldRow(refs: FormRefs, name: string, label: string, value: string): HTMLElement {
  const row = el("label", { class: "field-row" });
  row.appendChild(el("span", {}, label));
  const input = el("input", { name, value });
  refs.fields.set(name, input);
  row.appendChild(input);
  return row;
}

function barrierEditor(refs: FormRefs, defaults: DefaultsDoc, row?: { category: string; position: string; fixedCost: string; rationale: string }): HTMLElement {
  const box = el("div", { class: "barrier-editor" });
  const category = el("select", { class: "barrier-field", "data-field": "category" }) as unknown as HTMLSelectElement;
  for (const option of defaults.categories) {
    const opt = el("option", { value: option.name }, option.name);
    category.appendChild(opt);
  }
  if (row) {
    category.value = row.category;
  }
  box.appendChild(category);
  const position = el("input", { class: "barrier-field", "data-field": "position", placeholder: "position", value: row?.position ?? "" });
  const fixedCost = el("input", { class: "barrier-field", "data-field": "fixedCost", placeholder: "fixed cost", value: row?.fixedCost ?? "" });
  const rationale = el("input", { class: "barrier-field barrier-rationale", "data-field": "rationale", placeholder: "rationale", value: row?.rationale ?? "" });
  box.appendChild(position);
  box.appendChild(fixedCost);
  box.appendChild(rationale);
  const remove = el("button", { type: "button", class: "drop-saved" }, "x");
  remove.addEventListener("click", () => box.remove());
  box.appendChild(remove);
  return box;
}

function readForm(refs: FormRefs): ScenarioFormValues {
  const get = (name: string) => refs.fields.get(name)?.value ?? "";
  const barriers = Array.from(refs.barriers.querySelectorAll(".barrier-editor")).map((box) => {
    const read = (field: string) =>
      (box.querySelector(`[data-field="${field}"]`) as HTMLInputElement | HTMLSelectElement).value;
    return {
      category: read("category"),
      position: read("position"),
      fixedCost: read("fixedCost"),
      rationale: read("rationale"),
    };
  });
  return {
    projectId: get("projectId"),
    currentLevel: get("currentLevel"),
    targetLevel: get("targetLevel"),
    epsilon: get("epsilon"),
    kSlope: get("kSlope"),
    baseMarginalCost: get("baseMarginalCost"),
    escalation: get("escalation"),
    barrierSpacing: get("barrierSpacing"),
    barriers,
    gatePolicy: get("gatePolicy"),
    gateFloor: get("gateFloor"),
    benchmarkScores: get("benchmarkScores"),
  };
}

function fillForm(refs: FormRefs, defaults: DefaultsDoc, scenario: ScenarioDoc): void {
  const values = formFromScenario(scenario);
  for (const [name, input] of refs.fields) {
    const value = (values as unknown as Record<string, string>)[name];
    if (typeof value === "string") {
      input.value = value;
    }
  }
  refs.barriers.textContent = "";
  for (const row of values.barriers) {
    refs.barriers.appendChild(barrierEditor(refs, defaults, row));
  }
}

function initialScenario(defaults: DefaultsDoc): ScenarioDoc {
  const current = 4.0;
  const barriers = [];
  let position = current + defaults.cost.barrierSpacing;
  for (const category of defaults.categories) {
    if (position > LEVEL_MAX) {
      break;
    }
    barriers.push({
      category: category.name,
      position: Math.min(position, LEVEL_MAX),
      fixedCost: category.fixedCost,
      rationale: category.rationale,
    });
    position += defaults.cost.barrierSpacing;
  }
  return {
    schema: "scenario.v1",
    projectId: "my-project",
    currentLevel: current,
    targetLevel: 6.0,
    curve: { ...defaults.curve },
    cost: { ...defaults.cost, barriers },
  };
}

// --- bootstrap -----------------------------------------------------------------

async function main(): Promise<void> {
  const api = new ApiClient();
  const root = document.getElementById("app");
  if (root === null) {
    return;
  }

  let defaults: DefaultsDoc;
  try {
    defaults = await api.defaults();
  } catch (error) {
    root.textContent = `service unavailable: ${error instanceof Error ? error.message : error}`;
    return;
  }

  const store = new WorkbenchStore((scenario) => api.evaluate(scenario), initialScenario(defaults));

  root.appendChild(el("header", {}, ""));
  const header = root.querySelector("header") as HTMLElement;
  header.appendChild(el("h1", {}, "maintainability target workbench"));
  const status = el("span", { class: "status" });
  header.appendChild(status);
  const summary = el("div", { id: "summary", class: "summary" });
  root.appendChild(summary);

  const layout = el("main");
  const sidebar = el("aside", { id: "sidebar" });
  const panels = el("section", { id: "panels" });
  layout.appendChild(sidebar);
  layout.appendChild(panels);
  root.appendChild(layout);

  const makePanel = (title: string): HTMLElement => {
    const wrap = el("div", { class: "panel" });
    wrap.appendChild(el("h2", {}, title));
    const body = el("div", { class: "panel-body" });
    wrap.appendChild(body);
    panels.appendChild(wrap);
    return body;
  };
  const roadmapBody = makePanel("Roadmap");
  const benefitBody = makePanel("Benefit");
  const costBody = makePanel("Cost");
  const compareBody = makePanel("Compare");

  // sidebar form
  const refs: FormRefs = {
    root: sidebar,
    fields: new Map(),
    barriers: el("div", { id: "barrier-rows" }),
    error: el("div", { class: "form-error" }),
  };
  sidebar.appendChild(el("h2", {}, "Scenario"));
  sidebar.appendChild(fieldRow(refs, "projectId", "project id", ""));
  sidebar.appendChild(fieldRow(refs, "currentLevel", "current level", ""));
  sidebar.appendChild(fieldRow(refs, "targetLevel", "target level", ""));
  sidebar.appendChild(fieldRow(refs, "epsilon", "curve epsilon", ""));
  sidebar.appendChild(fieldRow(refs, "kSlope", "breakpoint slope factor", ""));
  sidebar.appendChild(fieldRow(refs, "baseMarginalCost", "base marginal cost", ""));
  sidebar.appendChild(fieldRow(refs, "escalation", "escalation factor", ""));
  sidebar.appendChild(fieldRow(refs, "barrierSpacing", "barrier spacing", ""));
  sidebar.appendChild(el("h3", {}, "Barriers"));
  sidebar.appendChild(refs.barriers);
  const addBarrier = el("button", { type: "button" }, "add barrier");
  addBarrier.addEventListener("click", () => refs.barriers.appendChild(barrierEditor(refs, defaults)));
  sidebar.appendChild(addBarrier);
  sidebar.appendChild(fieldRow(refs, "gatePolicy", "gate policy (blank for none)", ""));
  sidebar.appendChild(fieldRow(refs, "gateFloor", "gate floor", ""));
  sidebar.appendChild(fieldRow(refs, "benchmarkScores", "benchmark scores", ""));
  sidebar.appendChild(refs.error);

  const apply = el("button", { type: "button", class: "primary" }, "evaluate");
  apply.addEventListener("click", () => {
    try {
      const scenario = scenarioFromForm(readForm(refs));
      refs.error.textContent = "";
      store.commitScenario(scenario);
    } catch (error) {
      refs.error.textContent = error instanceof FormError ? `${error.field}: ${error.message}` : String(error);
    }
  });
  sidebar.appendChild(apply);

  const download = el("button", { type: "button" }, "download scenario");
  download.addEventListener("click", () => {
    const scenario = store.snapshot().scenario;
    const blob = new Blob([scenarioJson(scenario)], { type: "application/json" });
    const link = el("a", { href: URL.createObjectURL(blob), download: scenarioFileName(scenario) });
    link.click();
    URL.revokeObjectURL(link.href);
  });
  sidebar.appendChild(download);

  const upload = el("input", { type: "file", accept: ".json,application/json" });
  upload.addEventListener("change", async () => {
    const file = upload.files?.[0];
    if (!file) {
      return;
    }
    try {
      const scenario = parseScenarioFile(await file.text());
      refs.error.textContent = "";
      fillForm(refs, defaults, scenario);
      store.commitScenario(scenario);
    } catch (error) {
      refs.error.textContent = error instanceof FormError ? error.message : String(error);
    }
    upload.value = "";
  });
  sidebar.appendChild(el("h3", {}, "Load scenario"));
  sidebar.appendChild(upload);

  sidebar.appendChild(el("h3", {}, "Save for comparison"));
  const saveName = el("input", { placeholder: "scenario name" });
  const save = el("button", { type: "button" }, "save");
  save.addEventListener("click", () => {
    const name = saveName.value.trim() || `scenario ${store.snapshot().saved.length + 1}`;
    if (store.saveCurrent(name)) {
      saveName.value = "";
    }
  });
  sidebar.appendChild(saveName);
  sidebar.appendChild(save);

  store.onChange((snapshot) => {
    status.textContent = snapshot.busy ? "evaluating..." : snapshot.lastError ?? "";
    status.classList.toggle("error", snapshot.lastError !== null);
    if (snapshot.result !== null) {
      renderSummary(summary, snapshot.result);
      renderBenefit(benefitBody, snapshot.result);
      renderCost(costBody, snapshot.result);
      renderRoadmap(roadmapBody, snapshot.result, snapshot.scenario.targetLevel, (level) => store.dragTarget(level));
    }
    renderCompare(compareBody, snapshot, store);
  });

  fillForm(refs, defaults, store.snapshot().scenario);
  store.commitScenario(store.snapshot().scenario);
}

main();
