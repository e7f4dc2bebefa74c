#pragma once

// Umbrella header for the library (the CLI layer lives in qcat/cli.hpp).

#include "qcat/errors.hpp"
#include "qcat/field.hpp"
#include "qcat/graded.hpp"
#include "qcat/io.hpp"
#include "qcat/koszul.hpp"
#include "qcat/laws.hpp"
#include "qcat/linalg.hpp"
#include "qcat/matrix.hpp"
#include "qcat/presentation.hpp"
#include "qcat/sampling.hpp"
#include "qcat/suites.hpp"
#include "qcat/tensor.hpp"
