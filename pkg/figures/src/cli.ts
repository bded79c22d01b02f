/**
 * Render figure SVGs from simulation CSV outputs.
 *
 *   node dist/cli.js --kind complex-plane --input ../outputs/fig1b.csv --output rendered/fig1b.svg
 *   node dist/cli.js --all --input-dir ../outputs --output-dir rendered
 *
 * Exits 1 on schema mismatches (missing/garbled columns).
 */

import { join } from "node:path";

import { SchemaError } from "./csv.js";
import { FigureKind, SHIPPED, render } from "./render.js";

interface Args {
  all: boolean;
  kind?: string;
  input?: string;
  output?: string;
  inputDir: string;
  outputDir: string;
  title?: string;
}

function parseArgs(argv: string[]): Args {
  const args: Args = { all: false, inputDir: "../outputs", outputDir: "rendered" };
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const next = () => {
      const value = argv[++i];
      if (value === undefined) throw new Error(`flag ${flag} needs a value`);
      return value;
    };
    switch (flag) {
      case "--all": args.all = true; break;
      case "--kind": args.kind = next(); break;
      case "--input": args.input = next(); break;
      case "--output": args.output = next(); break;
      case "--input-dir": args.inputDir = next(); break;
      case "--output-dir": args.outputDir = next(); break;
      case "--title": args.title = next(); break;
      default: throw new Error(`unknown flag ${flag}`);
    }
  }
  return args;
}

function main(): number {
  let args: Args;
  try {
    args = parseArgs(process.argv.slice(2));
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  const jobs = [];
  if (args.all) {
    for (const { stem, kind } of SHIPPED) {
      jobs.push({
        kind,
        input: join(args.inputDir, `${stem}.csv`),
        output: join(args.outputDir, `${stem}.svg`),
      });
    }
  } else {
    if (!args.kind || !args.input) {
      console.error("error: need --kind and --input (or --all)");
      return 1;
    }
    const output =
      args.output ?? join(args.outputDir, `${args.input.replace(/^.*\//, "").replace(/\.csv$/, "")}.svg`);
    jobs.push({ kind: args.kind as FigureKind, input: args.input, output, title: args.title });
  }
  for (const job of jobs) {
    try {
      const result = render(job);
      console.log(
        `${job.kind}: ${job.input} -> ${result.output} (${result.points} points, ${result.emphasized} emphasized)`,
      );
    } catch (err) {
      if (err instanceof SchemaError) {
        console.error(`schema error: ${err.message}`);
      } else {
        console.error(`error: ${(err as Error).message}`);
      }
      return 1;
    }
  }
  return 0;
}

process.exitCode = main();
