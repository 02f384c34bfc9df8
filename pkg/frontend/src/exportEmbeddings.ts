/**
 * Export job: embed every distinct sentence of a corpus and write a vector
 * file the harness can serve as a provider. Re-running the same job with
 * the same model produces an identical file (entries are sorted by text
 * hash and the encoders are deterministic for fixed weights).
 */

import { readCorpus, uniqueTexts } from "./corpus.js";
import { Encoder, makeEncoder } from "./encoders.js";
import { Encoding, VectorEntry, textHash, writeVectorFile } from "./vectorFile.js";

export interface ExportJob {
  model: string;
  corpusPath: string;
  outputPath: string;
  batchSize?: number;
  encoding?: Encoding;
  includeTexts?: boolean;
  /** Passed through to the model runtime (e.g. "cpu", "gpu"). */
  device?: string;
}

export interface ExportResult {
  modelId: string;
  dimension: number;
  count: number;
  outputPath: string;
}

export async function exportEmbeddings(
  job: ExportJob,
  encoder: Encoder = makeEncoder(job.model, job.device),
): Promise<ExportResult> {
  const texts = uniqueTexts(readCorpus(job.corpusPath));
  const batchSize = job.batchSize ?? 32;
  const entries: VectorEntry[] = [];
  let dimension = 0;
  for (let start = 0; start < texts.length; start += batchSize) {
    const batch = texts.slice(start, start + batchSize);
    let vectors: Float64Array[];
    try {
      vectors = await encoder.encode(batch);
    } catch (err) {
      if (/memory|alloc/i.test(String(err))) {
        throw new Error(`${err} -- try a smaller --batch-size (current ${batchSize})`);
      }
      throw err;
    }
    for (let i = 0; i < batch.length; i++) {
      dimension = vectors[i].length;
      entries.push({
        textHash: textHash(batch[i]),
        components: vectors[i],
        text: job.includeTexts ? batch[i] : undefined,
      });
    }
  }
  if (texts.length === 0) dimension = encoder.dimension;
  writeVectorFile(
    job.outputPath,
    encoder.modelId,
    dimension,
    entries,
    job.encoding ?? "binary",
  );
  return {
    modelId: encoder.modelId,
    dimension,
    count: entries.length,
    outputPath: job.outputPath,
  };
}
