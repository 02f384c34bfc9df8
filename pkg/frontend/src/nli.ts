/**
 * Entailment scoring backends for the scorer service.
 *
 * The score is the probability that the first sentence entails the second
 * (order matters). The lexical backend needs no model: it measures how much
 * of the second sentence's content the first one carries, with verbatim
 * containment scoring 1. A transformers cross-encoder backend can be
 * plugged in by model id when `@xenova/transformers` and the weights are
 * available locally.
 */

export interface NliScorer {
  readonly name: string;
  /** Resolves when the backend is ready to score. */
  warmup(): Promise<void>;
  /** P(s1 entails s2), in [0, 1]. */
  score(s1: string, s2: string): Promise<number>;
}

function tokens(text: string): string[] {
  return text
    .normalize("NFC")
    .toLowerCase()
    .split(/\s+/)
    .map((t) => t.replace(/^[^\p{L}\p{N}-]+|[^\p{L}\p{N}]+$/gu, ""))
    .filter((t) => t.length > 0);
}

const STOPWORDS = new Set(
  ("a an the and or but if then than that this these those is am are was were be been " +
    "being have has had do does did will would shall should can could may might must " +
    "not no of in on at by for with about into through during before after above below " +
    "to from up down out off over under again once here there all any both each few " +
    "more most other some such only own same so too very just now as i you he she it " +
    "we they me him her us them my your his its our their").split(" "),
);

function contentTokens(text: string): string[] {
  return tokens(text).filter((t) => !STOPWORDS.has(t));
}

/** Deterministic lexical entailment proxy. */
export class LexicalNliScorer implements NliScorer {
  readonly name = "lexical-entailment";

  async warmup(): Promise<void> {}

  async score(s1: string, s2: string): Promise<number> {
    const premise = tokens(s1).join(" ");
    const hypothesis = tokens(s2).join(" ");
    if (hypothesis.length === 0) return 0;
    if (premise === hypothesis || premise.includes(hypothesis)) return 1;
    const premiseSet = new Set(tokens(s1));
    const hypothesisContent = contentTokens(s2);
    if (hypothesisContent.length === 0) return 0;
    const covered = hypothesisContent.filter((t) => premiseSet.has(t)).length;
    // Cap below 1 so only true containment reaches certainty.
    return Math.min(covered / hypothesisContent.length, 1) * 0.95;
  }
}

interface TextClassifier {
  (input: string, options?: { topk?: number }): Promise<Array<{ label: string; score: number }>>;
}

/** Cross-encoder NLI model; the entailment class probability is the score. */
export class TransformerNliScorer implements NliScorer {
  readonly name: string;
  private classifier: TextClassifier | null = null;

  constructor(private readonly modelId: string) {
    this.name = `nli:${modelId}`;
  }

  async warmup(): Promise<void> {
    if (this.classifier) return;
    let transformers: any;
    try {
      transformers = await import("@xenova/transformers");
    } catch {
      throw new Error(
        `model ${this.modelId} needs @xenova/transformers; ` +
          "npm install @xenova/transformers (or use the lexical backend)",
      );
    }
    this.classifier = (await transformers.pipeline(
      "text-classification",
      this.modelId,
    )) as TextClassifier;
  }

  async score(s1: string, s2: string): Promise<number> {
    await this.warmup();
    const results = await this.classifier!(`${s1} [SEP] ${s2}`, { topk: 3 });
    const entailment = results.find((r) => r.label.toLowerCase().includes("entail"));
    if (!entailment) return 0;
    return Math.max(0, Math.min(1, entailment.score));
  }
}

export function makeScorer(backend: string): NliScorer {
  if (backend === "lexical") return new LexicalNliScorer();
  return new TransformerNliScorer(backend);
}
