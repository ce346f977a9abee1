import { readFileSync } from "node:fs";

import type { EvalResult, ScenarioDoc } from "../src/documents.js";

// The goldens are the frozen CLI/service outputs from the repository test
// suite; parity against them is the whole point of these tests.
export function loadGolden(name: string): EvalResult {
  const url = new URL(`../../tests/goldens/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as EvalResult;
}

export function loadFixture<T = EvalResult>(name: string): T {
  const url = new URL(`./fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

export function loadDemoScenario(): ScenarioDoc {
  const url = new URL("../../tests/fixtures/scenario_demo.json", import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as ScenarioDoc;
}
