import { TrialRecord } from "./csv.js";

/** Static SVG output: every renderer returns the full document as a string.
 *  No arithmetic is performed on the data beyond mapping values to pixels;
 *  orderings visible in the figure are certified by the CSV itself. */

const WIDTH = 900;
const HEIGHT = 520;
const MARGIN = { top: 48, right: 24, bottom: 64, left: 72 };

const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

const SERIES_STYLE = {
  actual: { color: "#8a8a8a", label: "actual difference" },
  ours: { color: "#1f77b4", label: "our bound" },
  gour: { color: "#2ca02c", label: "Gour et al." },
  bluhm: { color: "#d62728", label: "Bluhm et al." },
};

interface Scale {
  (value: number): number;
  domain: [number, number];
}

function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0;
  const fn = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as Scale;
  fn.domain = domain;
  return fn;
}

/** Round tick positions covering [min, max], at most `count` of them. */
export function niceTicks(min: number, max: number, count: number): number[] {
  if (!(max > min)) return [min];
  const rawStep = (max - min) / count;
  const power = Math.pow(10, Math.floor(Math.log10(rawStep)));
  const candidates = [1, 2, 5, 10].map((m) => m * power);
  const step = candidates.find((c) => c >= rawStep) ?? candidates[3];
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let t = start; t <= max + step * 1e-9; t += step) {
    ticks.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return ticks;
}

function formatTick(value: number): string {
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1000 || abs < 0.01) return value.toExponential(1);
  return String(Number(value.toPrecision(4)));
}

function escapeXml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function padDomain(min: number, max: number): [number, number] {
  if (!Number.isFinite(min) || !Number.isFinite(max)) return [0, 1];
  if (max === min) return [min - 0.5, max + 0.5];
  const pad = (max - min) * 0.05;
  return [min - pad, max + pad];
}

function axes(x: Scale, y: Scale, xLabel: string, yLabel: string, title: string): string {
  const parts: string[] = [];
  const bottom = MARGIN.top + PLOT_H;
  const right = MARGIN.left + PLOT_W;
  parts.push(
    `<line x1="${MARGIN.left}" y1="${bottom}" x2="${right}" y2="${bottom}" stroke="#333"/>`,
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${bottom}" stroke="#333"/>`
  );
  for (const t of niceTicks(x.domain[0], x.domain[1], 8)) {
    const px = x(t);
    parts.push(
      `<line x1="${px}" y1="${bottom}" x2="${px}" y2="${bottom + 5}" stroke="#333"/>`,
      `<text x="${px}" y="${bottom + 20}" text-anchor="middle" class="tick">${formatTick(t)}</text>`
    );
  }
  for (const t of niceTicks(y.domain[0], y.domain[1], 6)) {
    const py = y(t);
    parts.push(
      `<line x1="${MARGIN.left - 5}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="#333"/>`,
      `<line x1="${MARGIN.left}" y1="${py}" x2="${right}" y2="${py}" stroke="#eee"/>`,
      `<text x="${MARGIN.left - 9}" y="${py + 4}" text-anchor="end" class="tick">${formatTick(t)}</text>`
    );
  }
  parts.push(
    `<text x="${MARGIN.left + PLOT_W / 2}" y="${HEIGHT - 14}" text-anchor="middle" class="label">${escapeXml(xLabel)}</text>`,
    `<text x="20" y="${MARGIN.top + PLOT_H / 2}" text-anchor="middle" class="label" transform="rotate(-90 20 ${MARGIN.top + PLOT_H / 2})">${escapeXml(yLabel)}</text>`,
    `<text x="${MARGIN.left + PLOT_W / 2}" y="24" text-anchor="middle" class="title">${escapeXml(title)}</text>`
  );
  return parts.join("\n");
}

function legend(entries: { color: string; label: string }[], note?: string): string {
  const parts: string[] = [];
  let xCursor = MARGIN.left;
  const yPos = MARGIN.top - 12;
  for (const entry of entries) {
    parts.push(
      `<circle cx="${xCursor + 5}" cy="${yPos - 4}" r="4" fill="${entry.color}"/>`,
      `<text x="${xCursor + 14}" y="${yPos}" class="legend">${escapeXml(entry.label)}</text>`
    );
    xCursor += 18 + entry.label.length * 7.2;
  }
  if (note) {
    parts.push(`<text x="${xCursor + 6}" y="${yPos}" class="legend note">${escapeXml(note)}</text>`);
  }
  return parts.join("\n");
}

function document(body: string): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
    `<style>text{font-family:sans-serif}.tick{font-size:11px;fill:#333}.label{font-size:13px;fill:#111}.title{font-size:15px;fill:#111}.legend{font-size:12px;fill:#111}.note{fill:#777;font-style:italic}</style>`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`,
    body,
    `</svg>`,
  ].join("\n");
}

/** Scatter of the three bounds plus the actual value, trial index on x. */
export function renderFigure1(records: TrialRecord[]): string {
  const gourPoints = records.filter((r) => r.gourApplicable && r.boundGour !== null);
  const values: number[] = [];
  for (const r of records) {
    values.push(r.lhsActual, r.boundNew, r.boundBluhm);
  }
  for (const r of gourPoints) values.push(r.boundGour as number);

  const maxIndex = records.length > 0 ? Math.max(...records.map((r) => r.trialIndex)) : 1;
  const x = linearScale(padDomain(0, maxIndex), [MARGIN.left, MARGIN.left + PLOT_W]);
  const y = linearScale(
    padDomain(Math.min(...values), Math.max(...values)),
    [MARGIN.top + PLOT_H, MARGIN.top]
  );

  const dots: string[] = [];
  const marker = (r: TrialRecord, value: number, color: string, cls: string) =>
    `<circle cx="${x(r.trialIndex).toFixed(2)}" cy="${y(value).toFixed(2)}" r="2" fill="${color}" fill-opacity="0.65" class="${cls}"/>`;
  for (const r of records) dots.push(marker(r, r.lhsActual, SERIES_STYLE.actual.color, "pt-actual"));
  for (const r of records) dots.push(marker(r, r.boundNew, SERIES_STYLE.ours.color, "pt-ours"));
  for (const r of gourPoints) dots.push(marker(r, r.boundGour as number, SERIES_STYLE.gour.color, "pt-gour"));
  for (const r of records) dots.push(marker(r, r.boundBluhm, SERIES_STYLE.bluhm.color, "pt-bluhm"));

  const legendEntries = [SERIES_STYLE.actual, SERIES_STYLE.ours];
  let note: string | undefined;
  if (gourPoints.length > 0) {
    legendEntries.push(SERIES_STYLE.gour);
  } else if (records.length > 0) {
    note = "(Gour et al.: no applicable trials)";
  }
  legendEntries.push(SERIES_STYLE.bluhm);

  const body = [
    axes(x, y, "trial index", "value (nats)", "Relative-entropy bounds per trial"),
    legend(legendEntries, note),
    dots.join("\n"),
  ].join("\n");
  return document(body);
}

export function histogramBins(values: number[]): { x0: number; x1: number; count: number }[] {
  if (values.length === 0) return [];
  const [lo, hi] = padDomain(Math.min(...values), Math.max(...values));
  const binCount = Math.max(1, Math.min(60, Math.ceil(Math.sqrt(values.length))));
  const width = (hi - lo) / binCount;
  const counts = new Array<number>(binCount).fill(0);
  for (const v of values) {
    const i = Math.min(binCount - 1, Math.floor((v - lo) / width));
    counts[i] += 1;
  }
  return counts.map((count, i) => ({ x0: lo + i * width, x1: lo + (i + 1) * width, count }));
}

/** Histogram of the per-trial slack of our bound. */
export function renderSlackHistogram(records: TrialRecord[]): string {
  const bins = histogramBins(records.map((r) => r.slackNew));
  const maxCount = bins.reduce((m, b) => Math.max(m, b.count), 0);
  const x = linearScale(
    bins.length > 0 ? [bins[0].x0, bins[bins.length - 1].x1] : [0, 1],
    [MARGIN.left, MARGIN.left + PLOT_W]
  );
  const y = linearScale([0, maxCount > 0 ? maxCount * 1.05 : 1], [MARGIN.top + PLOT_H, MARGIN.top]);

  const bars = bins
    .map((b) => {
      const left = x(b.x0);
      const top = y(b.count);
      const barWidth = Math.max(0, x(b.x1) - left - 1);
      const barHeight = MARGIN.top + PLOT_H - top;
      return `<rect x="${left.toFixed(2)}" y="${top.toFixed(2)}" width="${barWidth.toFixed(2)}" height="${barHeight.toFixed(2)}" fill="${SERIES_STYLE.ours.color}" fill-opacity="0.8" class="bar"/>`;
    })
    .join("\n");

  const body = [
    axes(x, y, "slack of our bound (nats)", "trials", "Slack distribution"),
    legend([SERIES_STYLE.ours]),
    bars,
  ].join("\n");
  return document(body);
}
