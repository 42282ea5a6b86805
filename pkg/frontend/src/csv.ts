/**
 * Strict reader for the bound-comparison CSV. The producing CLI never quotes
 * fields (12-significant-digit floats, integers, true/false, empty for absent),
 * so the schema is validated hard instead of tolerating dialects.
 */

export const EXPECTED_HEADER = [
  "trial_index",
  "dim",
  "epsilon",
  "delta",
  "lhs_actual",
  "bound_new",
  "bound_gour",
  "gour_applicable",
  "bound_bluhm",
  "slack_new",
  "lambda_min_sigma",
] as const;

export interface TrialRecord {
  trialIndex: number;
  dim: number;
  epsilon: number;
  delta: number | null;
  lhsActual: number;
  boundNew: number;
  boundGour: number | null;
  gourApplicable: boolean;
  boundBluhm: number;
  slackNew: number;
  lambdaMinSigma: number;
}

export class CsvSchemaError extends Error {}
export class CsvRowError extends Error {
  constructor(readonly row: number, message: string) {
    super(`row ${row}: ${message}`);
  }
}

function parseFloatStrict(field: string, name: string, row: number): number {
  const value = Number(field);
  if (field.trim() === "" || !Number.isFinite(value)) {
    throw new CsvRowError(row, `field ${name} is not a finite number: ${JSON.stringify(field)}`);
  }
  return value;
}

function parseIntStrict(field: string, name: string, row: number): number {
  if (!/^-?\d+$/.test(field)) {
    throw new CsvRowError(row, `field ${name} is not an integer: ${JSON.stringify(field)}`);
  }
  return Number(field);
}

function parseOptionalFloat(field: string, name: string, row: number): number | null {
  return field === "" ? null : parseFloatStrict(field, name, row);
}

function parseBool(field: string, name: string, row: number): boolean {
  if (field === "true") return true;
  if (field === "false") return false;
  throw new CsvRowError(row, `field ${name} must be true or false: ${JSON.stringify(field)}`);
}

/** Parse the full text of a comparison CSV. Row numbers in errors are 1-based
 *  file lines (the header is line 1). */
export function parseCsv(text: string): TrialRecord[] {
  const lines = text.split(/\r?\n/);
  if (lines.length === 0 || lines[0].trim() === "") {
    throw new CsvSchemaError("empty CSV: missing header");
  }
  const header = lines[0].split(",");
  if (header.length !== EXPECTED_HEADER.length || header.some((h, i) => h !== EXPECTED_HEADER[i])) {
    const missing = EXPECTED_HEADER.filter((h) => !header.includes(h));
    if (missing.length > 0) {
      throw new CsvSchemaError(`missing columns: ${missing.join(", ")}`);
    }
    throw new CsvSchemaError(`unexpected header: ${lines[0]}`);
  }
  const records: TrialRecord[] = [];
  for (let i = 1; i < lines.length; i++) {
    const line = lines[i];
    if (line === "") continue; // trailing newline
    const row = i + 1;
    const fields = line.split(",");
    if (fields.length !== EXPECTED_HEADER.length) {
      throw new CsvRowError(row, `expected ${EXPECTED_HEADER.length} fields, got ${fields.length}`);
    }
    const gourApplicable = parseBool(fields[7], "gour_applicable", row);
    const boundGour = parseOptionalFloat(fields[6], "bound_gour", row);
    if (gourApplicable && boundGour === null) {
      throw new CsvRowError(row, "gour_applicable is true but bound_gour is empty");
    }
    records.push({
      trialIndex: parseIntStrict(fields[0], "trial_index", row),
      dim: parseIntStrict(fields[1], "dim", row),
      epsilon: parseFloatStrict(fields[2], "epsilon", row),
      delta: parseOptionalFloat(fields[3], "delta", row),
      lhsActual: parseFloatStrict(fields[4], "lhs_actual", row),
      boundNew: parseFloatStrict(fields[5], "bound_new", row),
      boundGour,
      gourApplicable,
      boundBluhm: parseFloatStrict(fields[8], "bound_bluhm", row),
      slackNew: parseFloatStrict(fields[9], "slack_new", row),
      lambdaMinSigma: parseFloatStrict(fields[10], "lambda_min_sigma", row),
    });
  }
  return records;
}
