#pragma once

#include "collatz/asymptotics.hpp"
#include "collatz/eolevels.hpp"
#include "collatz/errors.hpp"
#include "collatz/families.hpp"
#include "collatz/mixing.hpp"
#include "collatz/modular.hpp"
#include "collatz/natural.hpp"
#include "collatz/records.hpp"
#include "collatz/repcore.hpp"
#include "collatz/trajectory.hpp"
#include "collatz/wirsching.hpp"
#include "collatz/verify.hpp"
#include "collatz/format.hpp"
