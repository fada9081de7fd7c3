#pragma once

#include "fanocert/integer.hpp"
#include "fanocert/check.hpp"
#include "fanocert/lattice.hpp"
#include "fanocert/riemannroch.hpp"
#include "fanocert/diophantine.hpp"
#include "fanocert/secant.hpp"
#include "fanocert/nefness.hpp"
#include "fanocert/schubert.hpp"
#include "fanocert/gonality.hpp"
#include "fanocert/ruled.hpp"
#include "fanocert/catalog.hpp"
#include "fanocert/report.hpp"
