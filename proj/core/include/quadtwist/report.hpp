#pragma once

#include <string>

#include "quadtwist/localdata.hpp"
#include "quadtwist/predict.hpp"
#include "quadtwist/tunnell.hpp"

namespace quadtwist {

// library version reported by the CLI and embedded in structured output
const char* version_string();

// exact decimal forms; rationals render as "n" or "n/d"
std::string rat_str(const Rat& x);

std::string to_string(SplitType t);
std::string to_string(ReductionKind k);
std::string to_string(GoodSubkind k);
std::string to_string(CongruentVerdict v);
std::string to_string(PredictionKind k);
std::string to_string(Parity p);
std::string to_string(PlaceClass c);

// one-line human-readable summaries
std::string describe(const ReductionData& rd);
std::string describe(const ShaPrediction& sp);

}  // namespace quadtwist
