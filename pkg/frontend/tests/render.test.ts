import { describe, expect, it } from "vitest";

import { TrialRecord } from "../src/csv.js";
import { histogramBins, niceTicks, renderFigure1, renderSlackHistogram } from "../src/render.js";

function record(overrides: Partial<TrialRecord> = {}): TrialRecord {
  return {
    trialIndex: 0,
    dim: 15,
    epsilon: 0.25,
    delta: null,
    lhsActual: 0.1,
    boundNew: 0.5,
    boundGour: null,
    gourApplicable: false,
    boundBluhm: 0.9,
    slackNew: 0.4,
    lambdaMinSigma: 0.001,
    ...overrides,
  };
}

function sample(n: number, gourEvery = 0): TrialRecord[] {
  const records: TrialRecord[] = [];
  for (let i = 0; i < n; i++) {
    const applicable = gourEvery > 0 && i % gourEvery === 0;
    records.push(
      record({
        trialIndex: i,
        lhsActual: 0.05 + 0.3 * Math.sin(i / 7) ** 2,
        boundNew: 0.6 + 0.2 * Math.cos(i / 5) ** 2,
        boundBluhm: 1.1 + 0.2 * Math.cos(i / 5) ** 2,
        slackNew: 0.5 + 0.1 * Math.sin(i / 3),
        boundGour: applicable ? 0.9 : null,
        gourApplicable: applicable,
      })
    );
  }
  return records;
}

describe("renderFigure1", () => {
  it("emits one marker per record and series", () => {
    const svg = renderFigure1(sample(40));
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg.match(/class="pt-actual"/g)).toHaveLength(40);
    expect(svg.match(/class="pt-ours"/g)).toHaveLength(40);
    expect(svg.match(/class="pt-bluhm"/g)).toHaveLength(40);
  });

  it("labels the legend with the agreed names", () => {
    const svg = renderFigure1(sample(20, 4));
    expect(svg).toContain(">our bound<");
    expect(svg).toContain(">Gour et al.<");
    expect(svg).toContain(">Bluhm et al.<");
    expect(svg).toContain("trial index");
  });

  it("plots gour markers only on applicable trials", () => {
    const svg = renderFigure1(sample(30, 3));
    expect(svg.match(/class="pt-gour"/g)).toHaveLength(10);
  });

  it("drops the gour series and notes the omission when never applicable", () => {
    const svg = renderFigure1(sample(25));
    expect(svg).not.toContain('class="pt-gour"');
    expect(svg).not.toContain(">Gour et al.<");
    expect(svg).toContain("no applicable trials");
  });

  it("renders empty axes for an empty record list", () => {
    const svg = renderFigure1([]);
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).toContain("trial index");
    expect(svg).not.toContain('class="pt-');
    expect(svg).not.toContain("no applicable trials");
  });
});

describe("renderSlackHistogram", () => {
  it("draws bars for populated data", () => {
    const svg = renderSlackHistogram(sample(200));
    expect(svg.startsWith("<svg")).toBe(true);
    const bars = svg.match(/class="bar"/g) ?? [];
    expect(bars.length).toBeGreaterThanOrEqual(10);
    expect(svg).toContain("slack of our bound");
  });

  it("renders empty axes for an empty record list", () => {
    const svg = renderSlackHistogram([]);
    expect(svg.startsWith("<svg")).toBe(true);
    expect(svg).not.toContain('class="bar"');
  });
});

describe("histogramBins", () => {
  it("covers every value exactly once", () => {
    const values = Array.from({ length: 500 }, (_, i) => Math.sin(i) * 2);
    const bins = histogramBins(values);
    const total = bins.reduce((s, b) => s + b.count, 0);
    expect(total).toBe(500);
    expect(bins.length).toBe(Math.ceil(Math.sqrt(500)));
  });

  it("handles a constant sample", () => {
    const bins = histogramBins([1.5, 1.5, 1.5]);
    expect(bins.reduce((s, b) => s + b.count, 0)).toBe(3);
  });

  it("returns no bins for no data", () => {
    expect(histogramBins([])).toEqual([]);
  });
});

describe("niceTicks", () => {
  it("stays inside the domain", () => {
    const ticks = niceTicks(0.13, 7.9, 8);
    expect(ticks.length).toBeGreaterThanOrEqual(3);
    for (const t of ticks) {
      expect(t).toBeGreaterThanOrEqual(0.13);
      expect(t).toBeLessThanOrEqual(7.9 + 1e-9);
    }
  });

  it("degenerates gracefully on a flat domain", () => {
    expect(niceTicks(2, 2, 5)).toEqual([2]);
  });
});
