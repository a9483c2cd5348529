import fc from "fast-check";
import { describe, expect, it } from "vitest";

import { FormModel, parseFinite } from "../src/form.js";
import { makeMetadata } from "./helpers.js";

const NAMES = ["radius_mean", "texture_mean", "area_worst"];

describe("parseFinite", () => {
  it("accepts ordinary decimals", () => {
    expect(parseFinite("17.99")).toBe(17.99);
    expect(parseFinite("  -3e-2 ")).toBe(-0.03);
  });

  it("rejects blanks and non-numbers", () => {
    expect(parseFinite("")).toBeNull();
    expect(parseFinite("   ")).toBeNull();
    expect(parseFinite("abc")).toBeNull();
    expect(parseFinite("1/2")).toBeNull();
  });

  it("rejects non-finite values", () => {
    expect(parseFinite("Infinity")).toBeNull();
    expect(parseFinite("NaN")).toBeNull();
  });
});

describe("FormModel", () => {
  it("orders fields like the model's feature_names", () => {
    const model = new FormModel(makeMetadata(NAMES));
    expect(model.fields.map((f) => f.name)).toEqual(NAMES);
  });

  it("prefills every field with the training mean", () => {
    const model = new FormModel(makeMetadata(NAMES));
    model.fields.forEach((field, i) => {
      expect(field.raw).toBe(String(i + 0.5));
      expect(model.valueOf(field.name)).toBe(i + 0.5);
    });
    expect(model.canSubmit).toBe(true);
  });

  it("blocks submission while any field is invalid", () => {
    const model = new FormModel(makeMetadata(NAMES));
    model.setValue("texture_mean", "");
    expect(model.canSubmit).toBe(false);
    expect(model.fieldValid("texture_mean")).toBe(false);
    model.setValue("texture_mean", "14.2");
    expect(model.canSubmit).toBe(true);
  });

  it("warns on out-of-range values without blocking", () => {
    const model = new FormModel(makeMetadata(NAMES));
    model.setValue("radius_mean", "999");
    expect(model.outOfRange("radius_mean")).toBe(true);
    expect(model.fieldValid("radius_mean")).toBe(true);
    expect(model.canSubmit).toBe(true);
  });

  it("payload throws while invalid", () => {
    const model = new FormModel(makeMetadata(NAMES));
    model.setValue("area_worst", "oops");
    expect(() => model.payload()).toThrow(/area_worst/);
  });

  it("round-trips typed values into the payload exactly", () => {
    fc.assert(
      fc.property(
        fc.array(fc.double({ noNaN: true, noDefaultInfinity: true }), {
          minLength: NAMES.length,
          maxLength: NAMES.length,
        }),
        (values) => {
          const model = new FormModel(makeMetadata(NAMES));
          NAMES.forEach((name, i) => model.setValue(name, String(values[i])));
          const payload = model.payload();
          expect(Object.keys(payload)).toEqual(NAMES);
          NAMES.forEach((name, i) => {
            expect(payload[name] === values[i]).toBe(true);
          });
        },
      ),
      { numRuns: 300 },
    );
  });

  it("rejects metadata without stats for a feature", () => {
    const meta = makeMetadata(NAMES);
    delete meta.feature_stats["area_worst"];
    expect(() => new FormModel(meta)).toThrow(/area_worst/);
  });
});
