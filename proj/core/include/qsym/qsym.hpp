#pragma once

#include "qsym/bigint.hpp"
#include "qsym/box_lattice.hpp"
#include "qsym/certify.hpp"
#include "qsym/conversion.hpp"
#include "qsym/errors.hpp"
#include "qsym/json_io.hpp"
#include "qsym/partition.hpp"
#include "qsym/plethysm.hpp"
#include "qsym/quasi_kostka.hpp"
#include "qsym/scd.hpp"
#include "qsym/symfunc.hpp"
#include "qsym/tableau.hpp"
#include "qsym/text_io.hpp"
#include "qsym/two_variable.hpp"
