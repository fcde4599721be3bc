#pragma once

#include "signcert/certificate.hpp"
#include "signcert/error.hpp"
#include "signcert/euclid.hpp"
#include "signcert/find_roots.hpp"
#include "signcert/interval.hpp"
#include "signcert/json_io.hpp"
#include "signcert/multipliers.hpp"
#include "signcert/oracle.hpp"
#include "signcert/polynomial.hpp"
#include "signcert/roots.hpp"
#include "signcert/text.hpp"
#include "signcert/verifier.hpp"
