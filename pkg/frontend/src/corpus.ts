/**
 * Minimal reader for matchprobe corpus files: enough to know which
 * sentences need embedding. An optional first `{"meta": ...}` line is
 * skipped; every other line is a triplet record with base/positive/negative
 * text slots.
 */

import { readFileSync } from "node:fs";

export interface TripletTexts {
  id: string;
  base: string;
  positive: string;
  negative: string;
}

export function readCorpus(path: string): TripletTexts[] {
  const triplets: TripletTexts[] = [];
  const lines = readFileSync(path, "utf8").split("\n");
  lines.forEach((line, index) => {
    if (!line.trim()) return;
    let record: any;
    try {
      record = JSON.parse(line);
    } catch {
      throw new Error(`${path}:${index + 1}: invalid JSON`);
    }
    if (index === 0 && record.meta !== undefined && record.id === undefined) return;
    for (const field of ["id", "base", "positive", "negative"]) {
      if (record[field] === undefined) {
        throw new Error(`${path}:${index + 1}: missing field ${field}`);
      }
    }
    triplets.push({
      id: String(record.id),
      base: String(record.base.text),
      positive: String(record.positive.text),
      negative: String(record.negative.text),
    });
  });
  return triplets;
}

/** Every distinct sentence text across all slots, in first-seen order. */
export function uniqueTexts(triplets: TripletTexts[]): string[] {
  const seen = new Set<string>();
  const texts: string[] = [];
  for (const t of triplets) {
    for (const text of [t.base, t.positive, t.negative]) {
      if (!seen.has(text)) {
        seen.add(text);
        texts.push(text);
      }
    }
  }
  return texts;
}
