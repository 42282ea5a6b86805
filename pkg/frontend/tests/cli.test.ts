import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { EXPECTED_HEADER } from "../src/csv.js";
import { UsageError, parseCliArgs, run } from "../src/cli.js";

const HEADER = EXPECTED_HEADER.join(",");
const GOOD_ROW = "0,15,0.25,,0.1,0.5,,false,0.9,0.4,0.001";

function tmp(): string {
  return mkdtempSync(join(tmpdir(), "plots-"));
}

describe("parseCliArgs", () => {
  it("accepts the full flag set", () => {
    const spec = parseCliArgs(["--in", "a.csv", "--out", "b.svg", "--which", "figure1"]);
    expect(spec).toEqual({ inputCsv: "a.csv", outputImage: "b.svg", which: "figure1" });
  });

  it("accepts slack-hist", () => {
    expect(parseCliArgs(["--in", "a", "--out", "b", "--which", "slack-hist"]).which).toBe(
      "slack-hist"
    );
  });

  it("rejects a missing flag", () => {
    expect(() => parseCliArgs(["--in", "a.csv", "--which", "figure1"])).toThrow(UsageError);
  });

  it("rejects an unknown plot kind", () => {
    expect(() => parseCliArgs(["--in", "a", "--out", "b", "--which", "pie"])).toThrow(
      /unknown plot kind/
    );
  });

  it("rejects stray positionals and unknown flags", () => {
    expect(() => parseCliArgs(["extra"])).toThrow(UsageError);
    expect(() => parseCliArgs(["--frobnicate"])).toThrow(UsageError);
  });
});

describe("run", () => {
  it("writes an svg and exits 0", () => {
    const dir = tmp();
    const input = join(dir, "in.csv");
    const output = join(dir, "out.svg");
    writeFileSync(input, [HEADER, GOOD_ROW].join("\n"));
    const code = run(["--in", input, "--out", output, "--which", "figure1"], () => {});
    expect(code).toBe(0);
    expect(readFileSync(output, "utf-8").startsWith("<svg")).toBe(true);
  });

  it("succeeds on a header-only csv", () => {
    const dir = tmp();
    const input = join(dir, "in.csv");
    const output = join(dir, "out.svg");
    writeFileSync(input, HEADER + "\n");
    expect(run(["--in", input, "--out", output, "--which", "slack-hist"], () => {})).toBe(0);
    expect(readFileSync(output, "utf-8")).toContain("<svg");
  });

  it("returns 2 and prints usage on bad flags", () => {
    const messages: string[] = [];
    const code = run(["--which", "figure1"], (m) => messages.push(m));
    expect(code).toBe(2);
    expect(messages.join("\n")).toContain("usage:");
  });

  it("returns 1 when the input file is missing", () => {
    const messages: string[] = [];
    const dir = tmp();
    const code = run(
      ["--in", join(dir, "absent.csv"), "--out", join(dir, "o.svg"), "--which", "figure1"],
      (m) => messages.push(m)
    );
    expect(code).toBe(1);
    expect(messages.join("\n")).toContain("absent.csv");
  });

  it("returns 1 and names the row on malformed data", () => {
    const dir = tmp();
    const input = join(dir, "in.csv");
    writeFileSync(input, [HEADER, GOOD_ROW, "garbage"].join("\n"));
    const messages: string[] = [];
    const code = run(
      ["--in", input, "--out", join(dir, "o.svg"), "--which", "figure1"],
      (m) => messages.push(m)
    );
    expect(code).toBe(1);
    expect(messages.join("\n")).toContain("row 3");
  });

  it("returns 1 on a header with missing columns", () => {
    const dir = tmp();
    const input = join(dir, "in.csv");
    writeFileSync(input, "trial_index,dim\n");
    const messages: string[] = [];
    const code = run(
      ["--in", input, "--out", join(dir, "o.svg"), "--which", "figure1"],
      (m) => messages.push(m)
    );
    expect(code).toBe(1);
    expect(messages.join("\n")).toMatch(/missing/i);
  });
});
