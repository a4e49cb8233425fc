import { describe, expect, it } from "vitest";

import { ExactSession, UnknownPredicateError, ExactCalcError } from "./index.js";

const session = new ExactSession();

describe("session transcript", () => {
  it("reproduces (pi**2 - 9) / (pi + 3)", () => {
    const x = session.pi.pow(2).sub(9).div(session.pi.add(3));
    expect(x.toString()).toBe("0.141593 {a-3 where a = 3.14159 [Pi]}");
  });

  it("reproduces the Fibonacci identity", () => {
    const phi = session.sqrt(5).add(1).div(2);
    const x = phi.pow(100)
      .sub(session.ca(1).sub(phi).pow(100))
      .div(session.sqrt(5));
    expect(x.toString()).toBe("3.54225e+20 {354224848179261915075}");
  });

  it("reproduces i**i - exp(pi / (sqrt(-2)**sqrt(2))**sqrt(2))", () => {
    const s2 = session.sqrt(2);
    const tower = session.sqrt(-2).pow(s2).pow(s2);
    const x = session.i.pow(session.i).sub(session.exp(session.pi.div(tower)));
    expect(x.toString()).toBe("0");
  });

  it("reproduces log(sqrt(2)+sqrt(3)) / log(5+2*sqrt(6))", () => {
    const x = session.log(session.sqrt(2).add(session.sqrt(3)))
      .div(session.log(session.ca(5).add(session.ca(2).mul(session.sqrt(6)))));
    expect(x.toString()).toBe("0.500000 {1/2}");
  });

  it("decides -1e-12 < exp(pi*sqrt(163)) - 262537412640768744 < -1e-13", () => {
    const v = session.exp(session.pi.mul(session.sqrt(163)))
      .sub(262537412640768744n);
    expect(session.ca("-1e-12").lessThan(v)).toBe(true);
    expect(v.lessThan("-1e-13")).toBe(true);
  });
});

describe("special values and predicates", () => {
  it("prints unsigned infinity for 1/0", () => {
    expect(session.ca(1).div(0).toString()).toBe("UnsignedInfinity");
  });

  it("raises the dedicated exception on Unknown equality", () => {
    const tiny = session.exp(session.exp(session.ca(-10000)));
    expect(() => session.ca(1).equals(tiny)).toThrow(UnknownPredicateError);
  });

  it("raises on Unknown zero tests but answers decided ones", () => {
    const u = session.ca(1).sub(session.exp(session.exp(session.ca(-10000))));
    expect(() => u.isZero()).toThrow(UnknownPredicateError);
    expect(session.pi.sub(session.pi).isZero()).toBe(true);
    expect(session.pi.sub(3).isZero()).toBe(false);
    expect(session.ca(1).equals(1)).toBe(true);
  });

  it("translates CLI errors to native exceptions", () => {
    expect(() => session.ca("1/)").toString()).toThrow(ExactCalcError);
    // ordering of non-real operands is a domain error
    expect(() => session.i.lessThan(0)).toThrow(ExactCalcError);
  });
});

describe("machine output", () => {
  it("exposes the serialized exact representation", () => {
    const x = session.pi.pow(2).sub(9).div(session.pi.add(3));
    const payload = x.machine();
    expect(payload.decimal).toBe("0.141593");
    expect(payload.truth).toBeNull();
    expect(payload.numerator).toEqual([
      { exps: [1], coeff: "1" },
      { exps: [0], coeff: "-3" },
    ]);
  });
});

describe("session isolation", () => {
  it("interleaved sessions match sequential runs", () => {
    const a = new ExactSession();
    const b = new ExactSession({ precLimit: 128 });
    const interleaved = [
      a.pi.add(1).toString(),
      b.sqrt(2).mul(b.sqrt(2)).toString(),
      a.sqrt(2).mul(a.sqrt(2)).toString(),
    ];
    const seqA = new ExactSession();
    const seqB = new ExactSession({ precLimit: 128 });
    const sequential = [
      seqA.pi.add(1).toString(),
      seqB.sqrt(2).mul(seqB.sqrt(2)).toString(),
      seqA.sqrt(2).mul(seqA.sqrt(2)).toString(),
    ];
    expect(interleaved).toEqual(sequential);
  });
});
