import { FeatureStats, ModelMetadata } from "./types.js";

export interface FieldState {
  name: string;
  raw: string;
  hint: FeatureStats;
}

/** Parse a typed value; null when it is not a finite number. */
export function parseFinite(raw: string): number | null {
  const trimmed = raw.trim();
  if (trimmed === "") {
    return null;
  }
  const value = Number(trimmed);
  return Number.isFinite(value) ? value : null;
}

/**
 * The predict form's state, kept free of DOM concerns so it can be tested
 * directly. Fields follow the model's feature order and start at the
 * training means; values outside the [min, max] hint only warn.
 */
export class FormModel {
  readonly fields: FieldState[];
  private byName: Map<string, FieldState>;

  constructor(meta: ModelMetadata) {
    this.fields = meta.feature_names.map((name) => {
      const hint = meta.feature_stats[name];
      if (hint === undefined) {
        throw new Error(`metadata missing stats for feature ${name}`);
      }
      return { name, raw: String(hint.mean), hint };
    });
    this.byName = new Map(this.fields.map((f) => [f.name, f]));
  }

  private field(name: string): FieldState {
    const field = this.byName.get(name);
    if (field === undefined) {
      throw new Error(`unknown field ${name}`);
    }
    return field;
  }

  setValue(name: string, raw: string): void {
    this.field(name).raw = raw;
  }

  valueOf(name: string): number | null {
    return parseFinite(this.field(name).raw);
  }

  fieldValid(name: string): boolean {
    return this.valueOf(name) !== null;
  }

  /** Valid but outside the training range: worth a warning, never a block. */
  outOfRange(name: string): boolean {
    const value = this.valueOf(name);
    if (value === null) {
      return false;
    }
    const { min, max } = this.field(name).hint;
    return value < min || value > max;
  }

  get canSubmit(): boolean {
    return this.fields.every((f) => parseFinite(f.raw) !== null);
  }

  /** Exactly the typed numbers, keyed by feature name, in no other shape. */
  payload(): Record<string, number> {
    const features: Record<string, number> = {};
    for (const field of this.fields) {
      const value = parseFinite(field.raw);
      if (value === null) {
        throw new Error(`field ${field.name} is not a finite number`);
      }
      features[field.name] = value;
    }
    return features;
  }
}
