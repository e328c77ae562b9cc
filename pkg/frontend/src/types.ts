/** Wire types mirroring the validation API payloads. */

export type Verdict = 'ACCEPTED' | 'REJECTED';

export interface CandidateRecord {
  rank: number;
  grams: string[];
  category: string;
  combined: number;
  npmi: number;
  bllr: number;
  dice: number;
  normNpmi: number;
  normBllr: number;
  normDice: number;
  count: number;
  weight: number;
  provenance: string[];
  semantic: string | null;
  reduplication: string | null;
  goldVerdict: Verdict | null;
}

export interface CandidatePage {
  total: number;
  offset: number;
  limit: number;
  runId: string;
  items: CandidateRecord[];
}

export interface GoldEntry {
  grams: string[];
  category: string;
  verdict: Verdict;
  meaning: string | null;
  addedBy: string;
  timestamp: string;
  source: 'RANKED_LIST' | 'FALSE_NEGATIVE';
}

export interface VerdictConflict {
  error: string;
  existing: GoldEntry;
  attempted: GoldEntry;
}

export interface LemmaSuggestion {
  word: string;
  level: number;
  stem: string;
  lemmas: string[];
  matchDepth: number;
  exact: boolean;
}

export interface RunStats {
  runId: string;
  goldEntries: number;
  categories: Record<string, number>;
  totalTokens: number;
  sentences: number;
  rankedCandidates: number;
}

/** Client-side row state layered over a server record. */
export type RowState =
  | { kind: 'idle' }
  | { kind: 'pending'; verdict: Verdict }
  | { kind: 'persisted'; verdict: Verdict }
  | { kind: 'conflict'; conflict: VerdictConflict };
