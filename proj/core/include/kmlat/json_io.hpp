#pragma once

#include <string>

#include "kmlat/datum.hpp"
#include "kmlat/descent.hpp"
#include "kmlat/gcm.hpp"
#include "kmlat/laurent.hpp"

namespace kmlat {

std::string read_file(const std::string& path);

// {"labels": ["0","1",...], "matrix": [[2,-1,...],...]}.  A matrix with 1's
// on the diagonal (entries in {1,2,3,4,6,"inf"}) is read as a Coxeter matrix
// and lifted to its canonical GCM.
GeneralizedCartanMatrix gcm_from_json(const std::string& text);
std::string gcm_to_json(const GeneralizedCartanMatrix& a);

// {"gcm": ..., "lattice_rank": n, "c": [[...],...], "h": [[...],...]}.
KacMoodyRootDatum datum_from_json(const std::string& text);
std::string datum_to_json(const KacMoodyRootDatum& d);

// {"gcm": ..., "perm": {"0":"0","1":"2","2":"1"}, "s0": [], "q": 2}.
QuasiSplitForm form_from_json(const std::string& text);
std::string form_to_json(const QuasiSplitForm& f);

struct LaurentMatrixInput {
  int n = 0;
  int p = 2;
  int k = 1;
  LaurentMatrix matrix;
};

// {"n": 2, "field": {"p": 2, "k": 1}, "entries": [[[[exp, "coeff"],...],...]]}
// with coefficients as integer-encoded field elements; the writer echoes the
// field modulus.
LaurentMatrixInput laurent_matrix_from_json(const std::string& text);
std::string laurent_matrix_to_json(const LaurentMatrixInput& m);

}  // namespace kmlat
