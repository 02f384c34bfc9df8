/**
 * Reader/writer for the matchprobe vector-file format.
 *
 * Line-delimited JSON: a header `{model_id, dimension, count, encoding}`
 * followed by one record per vector. Binary encoding stores components as
 * base64 little-endian float64 (bit-exact); decimal stores a JSON number
 * array. Records are keyed by the sha256 hex of the NFC-normalized text,
 * matching the harness's cache keys.
 */

import { createHash } from "node:crypto";
import { readFileSync, writeFileSync, renameSync } from "node:fs";

export type Encoding = "decimal" | "binary";

export interface VectorFileHeader {
  model_id: string;
  dimension: number;
  count: number;
  encoding: Encoding;
}

export interface VectorEntry {
  textHash: string;
  components: Float64Array;
  text?: string;
}

export function textHash(text: string): string {
  return createHash("sha256").update(text.normalize("NFC"), "utf8").digest("hex");
}

function componentsToBase64(components: Float64Array): string {
  const bytes = new Uint8Array(components.buffer.slice(
    components.byteOffset,
    components.byteOffset + components.byteLength,
  ));
  return Buffer.from(bytes).toString("base64");
}

function base64ToComponents(b64: string): Float64Array {
  const buf = Buffer.from(b64, "base64");
  const copy = new ArrayBuffer(buf.byteLength);
  new Uint8Array(copy).set(buf);
  return new Float64Array(copy);
}

export function writeVectorFile(
  path: string,
  modelId: string,
  dimension: number,
  entries: VectorEntry[],
  encoding: Encoding = "binary",
): void {
  const header: VectorFileHeader = {
    model_id: modelId,
    dimension,
    count: entries.length,
    encoding,
  };
  const lines = [JSON.stringify(header)];
  const sorted = [...entries].sort((a, b) => (a.textHash < b.textHash ? -1 : 1));
  for (const entry of sorted) {
    if (entry.components.length !== dimension) {
      throw new Error(
        `entry ${entry.textHash.slice(0, 12)} has dimension ${entry.components.length}, header says ${dimension}`,
      );
    }
    const record: Record<string, unknown> = { text_hash: entry.textHash };
    if (entry.text !== undefined) record.text = entry.text;
    if (encoding === "binary") {
      record.components_b64 = componentsToBase64(entry.components);
    } else {
      record.components = Array.from(entry.components);
    }
    lines.push(JSON.stringify(record));
  }
  const tmp = `${path}.tmp`;
  writeFileSync(tmp, lines.join("\n") + "\n", "utf8");
  renameSync(tmp, path);
}

export interface VectorFileData {
  header: VectorFileHeader;
  entries: VectorEntry[];
}

export function readVectorFile(path: string): VectorFileData {
  const lines = readFileSync(path, "utf8").split("\n").filter((l) => l.trim());
  if (lines.length === 0) throw new Error(`${path}: empty vector file`);
  const header = JSON.parse(lines[0]) as VectorFileHeader;
  if (!header.model_id || typeof header.dimension !== "number") {
    throw new Error(`${path}: bad header`);
  }
  const entries: VectorEntry[] = [];
  for (const line of lines.slice(1)) {
    const record = JSON.parse(line);
    const components =
      header.encoding === "binary"
        ? base64ToComponents(record.components_b64)
        : Float64Array.from(record.components as number[]);
    if (components.length !== header.dimension) {
      throw new Error(`${path}: record dimension ${components.length} != ${header.dimension}`);
    }
    entries.push({ textHash: record.text_hash, components, text: record.text });
  }
  if (entries.length !== header.count) {
    throw new Error(`${path}: header count ${header.count} != ${entries.length} records`);
  }
  return { header, entries };
}
