#include "quadtwist/report.hpp"

#include "quadtwist/mkt.hpp"

namespace quadtwist {

const char* version_string() { return "quadtwist 1.0.0"; }

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(SplitType t) {
    switch (t) {
        case SplitType::split: return "split";
        case SplitType::inert: return "inert";
        case SplitType::ramified: return "ramified";
    }
    return "?";
}

std::string to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::good: return "good";
        case ReductionKind::multiplicative: return "multiplicative";
        case ReductionKind::additive: return "additive";
    }
    return "?";
}

std::string to_string(GoodSubkind k) {
    switch (k) {
        case GoodSubkind::none: return "none";
        case GoodSubkind::ordinary: return "ordinary";
        case GoodSubkind::supersingular: return "supersingular";
    }
    return "?";
}

std::string to_string(CongruentVerdict v) {
    switch (v) {
        case CongruentVerdict::not_congruent: return "not congruent";
        case CongruentVerdict::congruent_conditional: return "congruent (under Sha finiteness)";
        case CongruentVerdict::undetermined: return "undetermined";
    }
    return "?";
}

std::string to_string(PredictionKind k) {
    switch (k) {
        case PredictionKind::ratio: return "sha-ratio";
        case PredictionKind::order_en: return "sha-order";
        case PredictionKind::heegner_ratio: return "heegner-ratio";
        case PredictionKind::heegner_order: return "heegner-order";
    }
    return "?";
}

std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

std::string to_string(PlaceClass c) {
    switch (c) {
        case PlaceClass::good: return "good";
        case PlaceClass::split_mult: return "split multiplicative";
        case PlaceClass::nonsplit_mult: return "nonsplit multiplicative";
        case PlaceClass::additive: return "additive";
    }
    return "?";
}

std::string describe(const ReductionData& rd) {
    std::string s = rd.kodaira.str() + ", v(disc_min) = " + std::to_string(rd.v_min_disc) +
                    ", c = " + rd.tamagawa.get_str() + ", " + to_string(rd.kind);
    if (rd.kind == ReductionKind::multiplicative)
        s += rd.split_mult ? " (split)" : " (nonsplit)";
    if (rd.kind == ReductionKind::good && rd.good_subkind != GoodSubkind::none)
        s += " (" + to_string(rd.good_subkind) + ")";
    return s;
}

std::string describe(const ShaPrediction& sp) {
    std::string s = to_string(sp.kind) + " = " + rat_str(sp.value);
    if (sp.vacuous) s += " [vacuous: coefficient vanishes]";
    if (!sp.vacuous && sp.kind != PredictionKind::ratio &&
        sp.kind != PredictionKind::heegner_ratio) {
        if (!sp.integral)
            s += " [NON-INTEGRAL]";
        else if (!sp.perfect_square)
            s += " [NOT A PERFECT SQUARE]";
    }
    if (sp.has_corrected) s += " (index-2 corrected: " + rat_str(sp.corrected_value) + ")";
    return s;
}

}  // namespace quadtwist
