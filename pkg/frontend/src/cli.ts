#!/usr/bin/env node
import { parseArgs } from "node:util";
import { readFileSync, writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import { parseCsv, CsvRowError, CsvSchemaError } from "./csv.js";
import { renderFigure1, renderSlackHistogram } from "./render.js";

const USAGE =
  "usage: entrobound-plots --in <csv> --out <image> --which <figure1|slack-hist>";

export class UsageError extends Error {}

export interface PlotSpec {
  inputCsv: string;
  outputImage: string;
  which: "figure1" | "slack-hist";
}

export function parseCliArgs(argv: string[]): PlotSpec {
  let values: { in?: string; out?: string; which?: string };
  try {
    ({ values } = parseArgs({
      args: argv,
      options: {
        in: { type: "string" },
        out: { type: "string" },
        which: { type: "string" },
      },
      allowPositionals: false,
    }));
  } catch (err) {
    throw new UsageError((err as Error).message);
  }
  if (!values.in || !values.out || !values.which) {
    throw new UsageError("--in, --out and --which are all required");
  }
  if (values.which !== "figure1" && values.which !== "slack-hist") {
    throw new UsageError(`unknown plot kind: ${values.which}`);
  }
  return { inputCsv: values.in, outputImage: values.out, which: values.which };
}

/** Returns the process exit code: 0 success, 1 runtime failure, 2 usage. */
export function run(argv: string[], log: (msg: string) => void = console.error): number {
  let spec: PlotSpec;
  try {
    spec = parseCliArgs(argv);
  } catch (err) {
    log(err instanceof UsageError ? `error: ${err.message}` : String(err));
    log(USAGE);
    return 2;
  }

  let text: string;
  try {
    text = readFileSync(spec.inputCsv, "utf-8");
  } catch (err) {
    log(`error: cannot read ${spec.inputCsv}: ${(err as Error).message}`);
    return 1;
  }

  let svg: string;
  try {
    const records = parseCsv(text);
    svg = spec.which === "figure1" ? renderFigure1(records) : renderSlackHistogram(records);
  } catch (err) {
    if (err instanceof CsvSchemaError || err instanceof CsvRowError) {
      log(`error: ${spec.inputCsv}: ${err.message}`);
      return 1;
    }
    throw err;
  }

  try {
    writeFileSync(spec.outputImage, svg, "utf-8");
  } catch (err) {
    log(`error: cannot write ${spec.outputImage}: ${(err as Error).message}`);
    return 1;
  }
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
