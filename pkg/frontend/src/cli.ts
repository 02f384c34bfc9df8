#!/usr/bin/env node
/**
 * matchprobe-adapter: export embeddings into vector files and serve the
 * scorer HTTP contract.
 *
 *   matchprobe-adapter export corpus.jsonl --model hash:64 --out vectors.jsonl
 *   matchprobe-adapter serve --backend lexical --port 8787
 */

import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { exportEmbeddings } from "./exportEmbeddings.js";
import { makeScorer } from "./nli.js";
import { serveScorer } from "./scorerService.js";

await yargs(hideBin(process.argv))
  .command(
    "export <corpus>",
    "Embed every distinct sentence of a corpus into a vector file",
    (y) =>
      y
        .positional("corpus", { type: "string", demandOption: true })
        .option("model", { type: "string", default: "hash:64" })
        .option("out", { type: "string", demandOption: true })
        .option("batch-size", { type: "number", default: 32 })
        .option("decimal", { type: "boolean", default: false })
        .option("with-texts", { type: "boolean", default: false })
        .option("device", { type: "string" }),
    async (argv) => {
      const result = await exportEmbeddings({
        model: argv.model,
        corpusPath: argv.corpus as string,
        outputPath: argv.out,
        batchSize: argv.batchSize,
        encoding: argv.decimal ? "decimal" : "binary",
        includeTexts: argv.withTexts,
        device: argv.device,
      });
      console.log(
        `wrote ${result.outputPath}: ${result.count} vectors, ` +
          `model ${result.modelId}, dim ${result.dimension}`,
      );
    },
  )
  .command(
    "serve",
    "Serve the order-sensitive scorer HTTP contract",
    (y) =>
      y
        .option("backend", { type: "string", default: "lexical" })
        .option("port", { type: "number", default: 8787 }),
    async (argv) => {
      const scorer = makeScorer(argv.backend);
      const service = await serveScorer(scorer, argv.port);
      console.log(`scorer ${scorer.name} listening on :${service.port}`);
    },
  )
  .demandCommand(1)
  .strict()
  .help()
  .parseAsync();
