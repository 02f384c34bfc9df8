/**
 * Sentence encoders behind one async interface.
 *
 * `hash:<dim>` is a deterministic offline encoder (character-trigram
 * FNV-1a counts with a fixed random-sign projection); it needs no model
 * download and is what the tests and fixtures use. Any other identifier is
 * treated as a transformers model id and loaded lazily through
 * `@xenova/transformers` with mean pooling over the last hidden state --
 * install that package and have the weights cached locally to use it.
 */

export interface Encoder {
  readonly modelId: string;
  readonly dimension: number;
  encode(texts: string[]): Promise<Float64Array[]>;
}

const FNV_OFFSET = 0xcbf29ce484222325n;
const FNV_PRIME = 0x100000001b3n;
const MASK64 = (1n << 64n) - 1n;

export function fnv1a64(data: Uint8Array): bigint {
  let h = FNV_OFFSET;
  for (const byte of data) {
    h ^= BigInt(byte);
    h = (h * FNV_PRIME) & MASK64;
  }
  return h;
}

const encoder = new TextEncoder();

/** Deterministic trigram-count encoder with signed bucket accumulation. */
export class HashProjectionEncoder implements Encoder {
  readonly modelId: string;
  readonly dimension: number;
  private readonly n = 3;

  constructor(dimension = 64) {
    if (dimension <= 0 || !Number.isInteger(dimension)) {
      throw new Error(`dimension must be a positive integer, got ${dimension}`);
    }
    this.dimension = dimension;
    this.modelId = `hash-${dimension}`;
  }

  private encodeOne(text: string): Float64Array {
    const lowered = text.normalize("NFC").toLowerCase();
    const vector = new Float64Array(this.dimension);
    const grams: string[] = [];
    if (lowered.length < this.n) {
      if (lowered.length > 0) grams.push(lowered);
    } else {
      for (let i = 0; i + this.n <= lowered.length; i++) {
        grams.push(lowered.slice(i, i + this.n));
      }
    }
    for (const gram of grams) {
      const h = fnv1a64(encoder.encode(gram));
      const bucket = Number(h % BigInt(this.dimension));
      // Second hash bit decides the sign so buckets do not only grow.
      const sign = (h >> 63n) & 1n ? -1 : 1;
      vector[bucket] += sign;
    }
    return vector;
  }

  async encode(texts: string[]): Promise<Float64Array[]> {
    return texts.map((t) => this.encodeOne(t));
  }
}

interface FeaturePipeline {
  (text: string, options: { pooling: string; normalize: boolean }): Promise<{
    data: Iterable<number>;
  }>;
}

/** Mean-pooled sentence embeddings from a locally cached transformer.
 * The pooling strategy is recorded in the model id written to the file
 * header, so consumers can tell how raw LMs were reduced to one vector. */
export class TransformerEncoder implements Encoder {
  readonly modelId: string;
  dimension = 0;
  private pipe: FeaturePipeline | null = null;

  constructor(private readonly rawModelId: string, private readonly device?: string) {
    this.modelId = `${rawModelId}#mean-pool`;
  }

  private async load(): Promise<FeaturePipeline> {
    if (this.pipe) return this.pipe;
    let transformers: any;
    try {
      transformers = await import("@xenova/transformers");
    } catch {
      throw new Error(
        `model ${this.rawModelId} needs @xenova/transformers; ` +
          "npm install @xenova/transformers (or use hash:<dim>)",
      );
    }
    const options = this.device ? { device: this.device } : {};
    this.pipe = (await transformers.pipeline(
      "feature-extraction",
      this.rawModelId,
      options,
    )) as FeaturePipeline;
    return this.pipe;
  }

  async encode(texts: string[]): Promise<Float64Array[]> {
    const pipe = await this.load();
    const vectors: Float64Array[] = [];
    for (const text of texts) {
      const output = await pipe(text, { pooling: "mean", normalize: false });
      const vector = Float64Array.from(output.data);
      if (this.dimension === 0) this.dimension = vector.length;
      if (vector.length !== this.dimension) {
        throw new Error(
          `model returned dimension ${vector.length}, expected ${this.dimension}`,
        );
      }
      vectors.push(vector);
    }
    return vectors;
  }
}

export function makeEncoder(modelId: string, device?: string): Encoder {
  const match = /^hash:(\d+)$/.exec(modelId);
  if (match) return new HashProjectionEncoder(Number(match[1]));
  return new TransformerEncoder(modelId, device);
}
