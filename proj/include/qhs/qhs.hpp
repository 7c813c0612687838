// Umbrella header.

#pragma once

#include "qhs/braid.hpp"
#include "qhs/hs.hpp"
#include "qhs/jacobi.hpp"
#include "qhs/json_io.hpp"
#include "qhs/matrix.hpp"
#include "qhs/pauli.hpp"
#include "qhs/qubits.hpp"
#include "qhs/separability.hpp"
#include "qhs/states.hpp"
